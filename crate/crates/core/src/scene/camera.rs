use glam::DVec3;

use super::geometry::Ray;

/// Pinhole camera. Pixel (0, 0) is the top-left corner of the image.
#[derive(Clone, Debug, PartialEq)]
pub struct Camera {
    position: DVec3,
    forward: DVec3,
    right: DVec3,
    up: DVec3,
    vertical_fov: f64,
    resolution: (u32, u32),
    tan_half: f64,
}

impl Camera {
    pub fn new(
        position: DVec3,
        look_at: DVec3,
        up: DVec3,
        vertical_fov: f64,
        resolution: (u32, u32),
    ) -> Result<Self, String> {
        if !(vertical_fov > 0.0 && vertical_fov < 180.0) {
            return Err(format!("vertical fov {vertical_fov} outside (0, 180)"));
        }
        if resolution.0 == 0 || resolution.1 == 0 {
            return Err("resolution must be at least 1x1".into());
        }
        let forward = (look_at - position).normalize_or_zero();
        if forward == DVec3::ZERO {
            return Err("camera position equals look_at".into());
        }
        let right = forward.cross(up).normalize_or_zero();
        if right == DVec3::ZERO {
            return Err("up vector parallel to the view direction".into());
        }
        Ok(Camera {
            position,
            forward,
            right,
            up: right.cross(forward),
            vertical_fov,
            resolution,
            tan_half: (vertical_fov.to_radians() * 0.5).tan(),
        })
    }

    pub fn position(&self) -> DVec3 {
        self.position
    }

    pub fn resolution(&self) -> (u32, u32) {
        self.resolution
    }

    pub fn vertical_fov(&self) -> f64 {
        self.vertical_fov
    }

    /// Ray through the film position `(px + jx, py + jy)` with jitter in [0,1)².
    pub fn generate_ray(&self, px: u32, py: u32, jx: f64, jy: f64) -> Ray {
        let (w, h) = (self.resolution.0 as f64, self.resolution.1 as f64);
        let x = (2.0 * (px as f64 + jx) / w - 1.0) * self.tan_half * (w / h);
        let y = (1.0 - 2.0 * (py as f64 + jy) / h) * self.tan_half;
        Ray::new(self.position, (self.forward + self.right * x + self.up * y).normalize())
    }
}
