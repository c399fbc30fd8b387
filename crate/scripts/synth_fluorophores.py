"""Regenerates the bundled Alexa Fluor spectra under data/fluorophores/.

The curves are smooth approximations built from published peak positions,
band widths and vibronic spacing; they are not the vendor's measured tables.
Values are written on a 1 nm grid in 0-100 relative units.
"""
import os
import numpy as np

# name: (excitation peak nm, emission peak nm, epsilon_max, quantum yield, MW g/mol)
DYES = {
    "alexa350": (346, 442, 19000.0, 0.24, 410.0),
    "alexa405": (401, 421, 34500.0, 0.54, 1028.0),
    "alexa488": (495, 519, 71000.0, 0.92, 643.0),
    "alexa546": (556, 573, 104000.0, 0.79, 1079.0),
    "alexa568": (578, 603, 91300.0, 0.69, 792.0),
    "alexa610": (612, 628, 138000.0, 0.50, 1285.0),
    "alexa633": (632, 647, 100000.0, 0.50, 1200.0),
}

VIBRONIC_CM = 1300.0
WL = np.arange(250.0, 851.0, 1.0)


def band(nu, centre, left, right):
    s = np.where(nu < centre, left, right)
    return np.exp(-0.5 * ((nu - centre) / s) ** 2)


def emission(peak):
    nu = 1e7 / WL
    c = 1e7 / peak
    # red side of emission is the low-wavenumber side
    main = band(nu, c, 900.0, 650.0)
    shoulder = 0.32 * band(nu, c - VIBRONIC_CM, 800.0, 700.0)
    return main + shoulder


def excitation(peak):
    nu = 1e7 / WL
    c = 1e7 / peak
    main = band(nu, c, 500.0, 850.0)
    shoulder = 0.30 * band(nu, c + VIBRONIC_CM, 700.0, 900.0)
    uv = 0.07 * band(nu, c + 14000.0, 2500.0, 2500.0)
    return main + shoulder + uv


def taper(y):
    # measured tables stop short of the near-IR; roll off before 800 nm
    w = np.clip((WL - 760.0) / 38.0, 0.0, 1.0)
    return y * 0.5 * (1.0 + np.cos(np.pi * w))


def pin_peak(curve_fn, target):
    # shift the generating peak until the tabulated argmax lands on target
    p = float(target)
    for _ in range(20):
        y = curve_fn(p)
        got = WL[np.argmax(y)]
        if got == target:
            return y
        p += target - got
    return curve_fn(p)


def write_csv(path, y):
    y = 100.0 * y / y.max()
    y[y < 0.05] = 0.0
    with open(path, "w") as f:
        f.write("wavelength_nm,relative_intensity\n")
        for w, v in zip(WL, y):
            f.write(f"{w:.0f},{v:.3f}\n")


def main():
    root = os.path.join(os.path.dirname(__file__), "..", "data", "fluorophores")
    for name, (ex, em, eps, qy, mw) in DYES.items():
        d = os.path.join(root, name)
        os.makedirs(d, exist_ok=True)
        write_csv(os.path.join(d, "excitation.csv"), pin_peak(excitation, ex))
        write_csv(os.path.join(d, "emission.csv"), taper(pin_peak(emission, em)))
        with open(os.path.join(d, "meta.toml"), "w") as f:
            f.write(f'display_name = "Alexa Fluor {name[5:]}"\n')
            f.write(f"epsilon_max = {eps:.1f}\n")
            f.write(f"quantum_yield = {qy}\n")
            f.write(f"molecular_weight = {mw:.1f}\n")


if __name__ == "__main__":
    main()
