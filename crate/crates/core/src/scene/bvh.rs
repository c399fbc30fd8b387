//! Bounding volume hierarchy over primitive bounds.

use super::geometry::{Aabb, Ray, Shape, ShapeHit};

#[derive(Clone, Debug)]
enum Node {
    Leaf { bounds: Aabb, start: usize, end: usize },
    Inner { bounds: Aabb, left: usize, right: usize },
}

impl Node {
    fn bounds(&self) -> &Aabb {
        match self {
            Node::Leaf { bounds, .. } | Node::Inner { bounds, .. } => bounds,
        }
    }
}

const LEAF_SIZE: usize = 2;

#[derive(Clone, Debug, Default)]
pub struct Bvh {
    nodes: Vec<Node>,
    /// Primitive indices in leaf order.
    order: Vec<usize>,
}

impl Bvh {
    pub fn build(shapes: &[Shape]) -> Bvh {
        let mut bvh = Bvh { nodes: Vec::new(), order: (0..shapes.len()).collect() };
        if !shapes.is_empty() {
            let bounds: Vec<Aabb> = shapes.iter().map(Shape::bounds).collect();
            bvh.build_node(&bounds, 0, shapes.len());
        }
        bvh
    }

    fn build_node(&mut self, bounds: &[Aabb], start: usize, end: usize) -> usize {
        let node_bounds = self.order[start..end].iter().fold(Aabb::EMPTY, |acc, &i| acc.union(bounds[i]));
        let id = self.nodes.len();
        if end - start <= LEAF_SIZE {
            self.nodes.push(Node::Leaf { bounds: node_bounds, start, end });
            return id;
        }
        let centroids = self.order[start..end].iter().fold(Aabb::EMPTY, |acc, &i| {
            let c = bounds[i].centroid();
            acc.union(Aabb { min: c, max: c })
        });
        let extent = centroids.max - centroids.min;
        let axis = if extent.x >= extent.y && extent.x >= extent.z {
            0
        } else if extent.y >= extent.z {
            1
        } else {
            2
        };
        // median split, index as the tiebreak so the build is deterministic
        self.order[start..end]
            .sort_by(|&a, &b| bounds[a].centroid()[axis].total_cmp(&bounds[b].centroid()[axis]).then(a.cmp(&b)));
        let mid = (start + end) / 2;
        self.nodes.push(Node::Leaf { bounds: node_bounds, start, end });
        let left = self.build_node(bounds, start, mid);
        let right = self.build_node(bounds, mid, end);
        self.nodes[id] = Node::Inner { bounds: node_bounds, left, right };
        id
    }

    /// Nearest hit in `(t_min, t_max)`; equal distances resolve to the lower
    /// primitive index.
    pub fn intersect(&self, shapes: &[Shape], ray: &Ray, t_min: f64, t_max: f64) -> Option<(usize, ShapeHit)> {
        if self.nodes.is_empty() {
            return None;
        }
        let inv = ray.dir.recip();
        let mut best: Option<(usize, ShapeHit)> = None;
        let mut limit = t_max;
        let mut stack = [0usize; 64];
        let mut top = 1;
        while top > 0 {
            top -= 1;
            let node = &self.nodes[stack[top]];
            // `limit` is inclusive so exact ties can still replace a higher index
            if !node.bounds().hit(ray, inv, t_min, limit) {
                continue;
            }
            match *node {
                Node::Leaf { start, end, .. } => {
                    for &i in &self.order[start..end] {
                        if let Some(h) = shapes[i].intersect(ray, t_min, limit.next_up()) {
                            let better = match best {
                                None => true,
                                Some((bi, bh)) => h.t < bh.t || (h.t == bh.t && i < bi),
                            };
                            if better {
                                limit = h.t;
                                best = Some((i, h));
                            }
                        }
                    }
                }
                Node::Inner { left, right, .. } => {
                    stack[top] = right;
                    stack[top + 1] = left;
                    top += 2;
                }
            }
        }
        best
    }
}

/// Reference nearest-hit search over every primitive.
pub fn intersect_linear(shapes: &[Shape], ray: &Ray, t_min: f64, t_max: f64) -> Option<(usize, ShapeHit)> {
    let mut best: Option<(usize, ShapeHit)> = None;
    for (i, s) in shapes.iter().enumerate() {
        let limit = best.map_or(t_max, |(_, h)| h.t);
        if let Some(h) = s.intersect(ray, t_min, limit) {
            best = Some((i, h));
        }
    }
    best
}
