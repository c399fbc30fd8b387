use std::f64::consts::PI;

use glam::DVec3;

/// Smallest accepted hit distance; keeps rays leaving a surface from
/// re-hitting it.
pub const RAY_EPSILON: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Ray {
    pub origin: DVec3,
    /// Unit length.
    pub dir: DVec3,
}

impl Ray {
    pub fn new(origin: DVec3, dir: DVec3) -> Self {
        Ray { origin, dir }
    }

    pub fn at(&self, t: f64) -> DVec3 {
        self.origin + self.dir * t
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Aabb {
    pub min: DVec3,
    pub max: DVec3,
}

impl Aabb {
    pub const EMPTY: Aabb = Aabb { min: DVec3::splat(f64::INFINITY), max: DVec3::splat(f64::NEG_INFINITY) };

    pub fn union(self, other: Aabb) -> Aabb {
        Aabb { min: self.min.min(other.min), max: self.max.max(other.max) }
    }

    pub fn centroid(&self) -> DVec3 {
        0.5 * (self.min + self.max)
    }

    /// Slab test; true if the ray overlaps the box within `(t_min, t_max)`.
    pub fn hit(&self, ray: &Ray, inv_dir: DVec3, t_min: f64, t_max: f64) -> bool {
        let t0 = (self.min - ray.origin) * inv_dir;
        let t1 = (self.max - ray.origin) * inv_dir;
        let near = t0.min(t1).max_element().max(t_min);
        let far = t0.max(t1).min_element().min(t_max);
        near <= far
    }
}

/// Scene primitive shapes. Distances in meters.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Shape {
    Sphere {
        center: DVec3,
        radius: f64,
    },
    /// Parallelogram `corner + u·edge_u + v·edge_v`, u,v ∈ [0,1]; its front
    /// side faces `edge_u × edge_v`.
    Quad {
        corner: DVec3,
        edge_u: DVec3,
        edge_v: DVec3,
    },
    Box {
        min: DVec3,
        max: DVec3,
    },
}

/// Distance along the ray and the outward (front-side) unit normal.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ShapeHit {
    pub t: f64,
    pub outward: DVec3,
}

impl Shape {
    /// Checks the shape's own invariants; the error names what is wrong.
    pub fn validate(&self) -> Result<(), String> {
        match *self {
            Shape::Sphere { center, radius } => {
                if !center.is_finite() || !(radius > 0.0 && radius.is_finite()) {
                    return Err(format!("sphere radius {radius} must be positive"));
                }
            }
            Shape::Quad { corner, edge_u, edge_v } => {
                if !(corner.is_finite() && edge_u.is_finite() && edge_v.is_finite()) {
                    return Err("non-finite quad".into());
                }
                let n = edge_u.cross(edge_v).length();
                if n <= 1e-12 * edge_u.length() * edge_v.length() || n == 0.0 {
                    return Err("quad edges are not linearly independent".into());
                }
            }
            Shape::Box { min, max } => {
                if !(min.is_finite() && max.is_finite()) || !min.cmplt(max).all() {
                    return Err(format!("box min {min} must be below max {max} componentwise"));
                }
            }
        }
        Ok(())
    }

    /// True for shapes that enclose a volume.
    pub fn is_closed(&self) -> bool {
        !matches!(self, Shape::Quad { .. })
    }

    pub fn bounds(&self) -> Aabb {
        match *self {
            Shape::Sphere { center, radius } => {
                Aabb { min: center - DVec3::splat(radius), max: center + DVec3::splat(radius) }
            }
            Shape::Quad { corner, edge_u, edge_v } => {
                let pts = [corner, corner + edge_u, corner + edge_v, corner + edge_u + edge_v];
                let mut b = Aabb::EMPTY;
                for p in pts {
                    b = b.union(Aabb { min: p, max: p });
                }
                let pad = DVec3::splat(1e-9 * (1.0 + b.max.abs().max(b.min.abs()).max_element()));
                Aabb { min: b.min - pad, max: b.max + pad }
            }
            Shape::Box { min, max } => Aabb { min, max },
        }
    }

    pub fn intersect(&self, ray: &Ray, t_min: f64, t_max: f64) -> Option<ShapeHit> {
        match *self {
            Shape::Sphere { center, radius } => {
                let oc = ray.origin - center;
                let b = oc.dot(ray.dir);
                let c = oc.length_squared() - radius * radius;
                let disc = b * b - c;
                if disc < 0.0 {
                    return None;
                }
                let sq = disc.sqrt();
                // numerically stable pair of roots
                let q = if b > 0.0 { -b - sq } else { -b + sq };
                let (mut t0, mut t1) = (q, if q != 0.0 { c / q } else { 0.0 });
                if t0 > t1 {
                    std::mem::swap(&mut t0, &mut t1);
                }
                let t = if t0 > t_min && t0 < t_max {
                    t0
                } else if t1 > t_min && t1 < t_max {
                    t1
                } else {
                    return None;
                };
                Some(ShapeHit { t, outward: (ray.at(t) - center) / radius })
            }
            Shape::Quad { corner, edge_u, edge_v } => {
                let n = edge_u.cross(edge_v);
                let denom = n.dot(ray.dir);
                if denom.abs() < 1e-14 * n.length() {
                    return None;
                }
                let t = n.dot(corner - ray.origin) / denom;
                if !(t > t_min && t < t_max) {
                    return None;
                }
                let p = ray.at(t) - corner;
                let nn = n.length_squared();
                let u = p.cross(edge_v).dot(n) / nn;
                let v = edge_u.cross(p).dot(n) / nn;
                if !(0.0..=1.0).contains(&u) || !(0.0..=1.0).contains(&v) {
                    return None;
                }
                Some(ShapeHit { t, outward: n / nn.sqrt() })
            }
            Shape::Box { min, max } => {
                let inv = ray.dir.recip();
                let t0 = (min - ray.origin) * inv;
                let t1 = (max - ray.origin) * inv;
                let tn = t0.min(t1);
                let tf = t0.max(t1);
                let near = tn.max_element();
                let far = tf.min_element();
                if near > far {
                    return None;
                }
                let (t, planes) = if near > t_min && near < t_max {
                    (near, tn)
                } else if far > t_min && far < t_max {
                    (far, tf)
                } else {
                    return None;
                };
                // face whose slab produced t; lowest axis on exact ties
                let axis = (0..3).find(|&a| planes[a] == t).unwrap_or(0);
                let p = ray.at(t);
                let mut outward = DVec3::ZERO;
                outward[axis] = if (p[axis] - min[axis]).abs() < (p[axis] - max[axis]).abs() { -1.0 } else { 1.0 };
                Some(ShapeHit { t, outward })
            }
        }
    }

    /// Strict interior test for closed shapes; always false for quads.
    pub fn contains(&self, p: DVec3) -> bool {
        match *self {
            Shape::Sphere { center, radius } => (p - center).length_squared() < radius * radius,
            Shape::Quad { .. } => false,
            Shape::Box { min, max } => p.cmpgt(min).all() && p.cmplt(max).all(),
        }
    }

    pub fn area(&self) -> f64 {
        match *self {
            Shape::Sphere { radius, .. } => 4.0 * PI * radius * radius,
            Shape::Quad { edge_u, edge_v, .. } => edge_u.cross(edge_v).length(),
            Shape::Box { min, max } => {
                let d = max - min;
                2.0 * (d.x * d.y + d.y * d.z + d.z * d.x)
            }
        }
    }

    /// Uniform point on the surface with its outward normal.
    pub fn sample_surface(&self, u1: f64, u2: f64) -> (DVec3, DVec3) {
        match *self {
            Shape::Sphere { center, radius } => {
                let z = 1.0 - 2.0 * u1;
                let r = (1.0 - z * z).max(0.0).sqrt();
                let phi = 2.0 * PI * u2;
                let n = DVec3::new(r * phi.cos(), r * phi.sin(), z);
                (center + n * radius, n)
            }
            Shape::Quad { corner, edge_u, edge_v } => {
                (corner + edge_u * u1 + edge_v * u2, edge_u.cross(edge_v).normalize())
            }
            Shape::Box { min, max } => {
                let d = max - min;
                let faces = [d.y * d.z, d.y * d.z, d.x * d.z, d.x * d.z, d.x * d.y, d.x * d.y];
                let total: f64 = faces.iter().sum();
                let mut target = u1 * total;
                let mut face = 5;
                for (i, a) in faces.iter().enumerate() {
                    if target < *a {
                        face = i;
                        break;
                    }
                    target -= a;
                }
                let v = (target / faces[face]).clamp(0.0, 1.0);
                let axis = face / 2;
                let (a1, a2) = ((axis + 1) % 3, (axis + 2) % 3);
                let mut p = DVec3::ZERO;
                let mut n = DVec3::ZERO;
                p[axis] = if face % 2 == 0 { min[axis] } else { max[axis] };
                n[axis] = if face % 2 == 0 { -1.0 } else { 1.0 };
                p[a1] = min[a1] + v * d[a1];
                p[a2] = min[a2] + u2 * d[a2];
                (p, n)
            }
        }
    }
}
