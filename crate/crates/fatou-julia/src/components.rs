//! Fatou components from basin rasters, and their orbits under the map.

use crate::{BasinRaster, JuliaError};
use fatou_core::{RationalMap, SpherePoint};
use std::collections::VecDeque;

/// Components smaller than this are treated as rasterization noise and
/// dropped (their pixels revert to unassigned).
pub const MIN_COMPONENT_PIXELS: usize = 4;

/// Sample points pushed forward per component when voting on its image.
pub const PROBES_PER_COMPONENT: usize = 32;

/// Fraction of cast votes the winning component must collect.
pub const VOTE_FRACTION: f64 = 0.8;

/// Minimum number of cast votes for a verdict at all.
pub const VOTE_QUORUM: usize = 4;

/// Where a component is sent by one application of the map.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ForwardImage {
    /// Not yet computed (fresh from [`fatou_components`]).
    Unknown,
    /// The vote did not reach quorum or agreement.
    Unresolved,
    /// The component maps into the component with this 1-based id.
    Mapped(usize),
}

/// Position of a component relative to the cycle its forward orbit lands
/// on: after `preperiod` steps the component enters a cycle of length
/// `period`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CyclePosition {
    pub preperiod: usize,
    pub period: usize,
}

/// One connected piece of a basin at pixel resolution.
#[derive(Clone, Debug)]
pub struct Component {
    /// 1-based basin label shared by all pixels of the component.
    pub basin: usize,
    /// Number of pixels in the component.
    pub pixel_count: usize,
    /// True when the component touches the raster frame, so its true
    /// extent may be clipped by the window.
    pub touches_border: bool,
    /// Image component under one application of the map.
    pub forward: ForwardImage,
    /// Eventual periodicity of the component's forward orbit, when every
    /// step of that orbit resolved.
    pub periodicity: Option<CyclePosition>,
}

/// The Fatou components of a raster: a per-pixel component id plus one
/// [`Component`] record per id.
#[derive(Clone, Debug)]
pub struct ComponentMap {
    width: usize,
    height: usize,
    pixel_ids: Vec<usize>,
    components: Vec<Component>,
}

impl ComponentMap {
    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    /// Component id of pixel `(x, y)`: 0 unassigned, otherwise 1-based.
    pub fn component_id(&self, x: usize, y: usize) -> usize {
        self.pixel_ids[y * self.width + x]
    }

    /// The component records; id `k` is `components()[k - 1]`.
    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// Number of components whose forward image resolved.
    pub fn resolved_count(&self) -> usize {
        self.components
            .iter()
            .filter(|c| matches!(c.forward, ForwardImage::Mapped(_)))
            .count()
    }

    /// Id of the component containing the raster pixel under `z`, if any.
    pub fn component_at(
        &self,
        raster: &BasinRaster,
        z: fatou_core::Complex64,
    ) -> Option<usize> {
        let (x, y) = raster.locate(z)?;
        match self.component_id(x, y) {
            0 => None,
            id => Some(id),
        }
    }
}

/// Extracts the connected components of each basin from a raster.
///
/// Pixels sharing a basin label are grouped by 4-connected flood fill;
/// groups smaller than [`MIN_COMPONENT_PIXELS`] are discarded. Components
/// are numbered from 1 in row-major order of their first pixel, so the
/// result is deterministic. Forward images start out
/// [`ForwardImage::Unknown`]; see [`component_orbit`].
pub fn fatou_components(raster: &BasinRaster) -> ComponentMap {
    let width = raster.width();
    let height = raster.height();
    let mut pixel_ids = vec![0usize; width * height];
    let mut components = Vec::new();

    for start_y in 0..height {
        for start_x in 0..width {
            let basin = raster.label(start_x, start_y);
            if basin == 0 || pixel_ids[start_y * width + start_x] != 0 {
                continue;
            }
            // Claim the whole component with a provisional id before
            // deciding whether to keep it.
            let provisional = components.len() + 1;
            let mut cells = Vec::new();
            let mut queue = VecDeque::new();
            pixel_ids[start_y * width + start_x] = provisional;
            queue.push_back((start_x, start_y));
            let mut touches_border = false;
            while let Some((x, y)) = queue.pop_front() {
                cells.push((x, y));
                if x == 0 || y == 0 || x == width - 1 || y == height - 1 {
                    touches_border = true;
                }
                let try_visit = |nx: usize, ny: usize,
                                     pixel_ids: &mut Vec<usize>,
                                     queue: &mut VecDeque<(usize, usize)>| {
                    let index = ny * width + nx;
                    if pixel_ids[index] == 0
                        && raster.label(nx, ny) == basin
                    {
                        pixel_ids[index] = provisional;
                        queue.push_back((nx, ny));
                    }
                };
                if x > 0 {
                    try_visit(x - 1, y, &mut pixel_ids, &mut queue);
                }
                if x + 1 < width {
                    try_visit(x + 1, y, &mut pixel_ids, &mut queue);
                }
                if y > 0 {
                    try_visit(x, y - 1, &mut pixel_ids, &mut queue);
                }
                if y + 1 < height {
                    try_visit(x, y + 1, &mut pixel_ids, &mut queue);
                }
            }
            if cells.len() < MIN_COMPONENT_PIXELS {
                for (x, y) in cells {
                    pixel_ids[y * width + x] = 0;
                }
                continue;
            }
            components.push(Component {
                basin,
                pixel_count: cells.len(),
                touches_border,
                forward: ForwardImage::Unknown,
                periodicity: None,
            });
        }
    }

    // A dropped flood resets its pixels and pushes no record, so the next
    // component reuses its provisional id: ids stay contiguous from 1.
    ComponentMap { width, height, pixel_ids, components }
}

/// Pushes each component forward one step and annotates the map with the
/// resulting component orbit structure.
///
/// Up to [`PROBES_PER_COMPONENT`] interior pixels per component are mapped
/// forward; each image that lands on a pixel with a component id casts a
/// vote. A component resolves to [`ForwardImage::Mapped`] when at least
/// [`VOTE_QUORUM`] votes were cast and the leading candidate holds at
/// least [`VOTE_FRACTION`] of them; otherwise it is
/// [`ForwardImage::Unresolved`]. Components whose entire forward chain
/// resolves get a [`CyclePosition`]; a chain that reaches an unresolved
/// component leaves `periodicity` as `None`.
pub fn component_orbit(
    map: &RationalMap,
    mut components: ComponentMap,
    raster: &BasinRaster,
) -> Result<ComponentMap, JuliaError> {
    let count = components.components.len();
    for id in 1..=count {
        let verdict = vote_forward(map, &components, raster, id);
        components.components[id - 1].forward = verdict;
    }
    for id in 1..=count {
        components.components[id - 1].periodicity =
            follow_chain(&components, id);
    }
    Ok(components)
}

/// Majority vote over forward images of probe pixels of component `id`.
fn vote_forward(
    map: &RationalMap,
    components: &ComponentMap,
    raster: &BasinRaster,
    id: usize,
) -> ForwardImage {
    let probes = select_probes(components, id);
    let mut tally = vec![0usize; components.components.len() + 1];
    let mut cast = 0usize;
    for (x, y) in probes {
        let z = raster.pixel_center(x, y);
        let image = match map.eval(SpherePoint::Finite(z)) {
            SpherePoint::Finite(v) => v,
            SpherePoint::Infinity => continue,
        };
        let Some((ix, iy)) = raster.locate(image) else {
            continue;
        };
        let target = components.component_id(ix, iy);
        if target == 0 {
            continue;
        }
        tally[target] += 1;
        cast += 1;
    }
    if cast < VOTE_QUORUM {
        return ForwardImage::Unresolved;
    }
    let (winner, votes) = tally
        .iter()
        .enumerate()
        .skip(1)
        .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(&a.0)))
        .map(|(id, &votes)| (id, votes))
        .expect("tally has at least one candidate slot");
    if votes as f64 >= VOTE_FRACTION * cast as f64 {
        ForwardImage::Mapped(winner)
    } else {
        ForwardImage::Unresolved
    }
}

/// Evenly spread probe pixels for a component, preferring interior pixels
/// (all four neighbors in the same component) so the probes sit well away
/// from the boundary where forward images straddle components.
fn select_probes(
    components: &ComponentMap,
    id: usize,
) -> Vec<(usize, usize)> {
    let width = components.width;
    let height = components.height;
    let mut interior = Vec::new();
    let mut all = Vec::new();
    for y in 0..height {
        for x in 0..width {
            if components.component_id(x, y) != id {
                continue;
            }
            all.push((x, y));
            let inside = x > 0
                && y > 0
                && x + 1 < width
                && y + 1 < height
                && components.component_id(x - 1, y) == id
                && components.component_id(x + 1, y) == id
                && components.component_id(x, y - 1) == id
                && components.component_id(x, y + 1) == id;
            if inside {
                interior.push((x, y));
            }
        }
    }
    let pool = if interior.is_empty() { all } else { interior };
    if pool.len() <= PROBES_PER_COMPONENT {
        return pool;
    }
    (0..PROBES_PER_COMPONENT)
        .map(|i| pool[i * pool.len() / PROBES_PER_COMPONENT])
        .collect()
}

/// Follows resolved forward images from `start` until the chain revisits a
/// component (eventual periodicity) or hits an unresolved step (`None`).
fn follow_chain(
    components: &ComponentMap,
    start: usize,
) -> Option<CyclePosition> {
    let mut path = Vec::new();
    let mut current = start;
    // A function on finitely many components must repeat within n+1 steps.
    for _ in 0..=components.components.len() {
        if let Some(position) = path.iter().position(|&id| id == current) {
            return Some(CyclePosition {
                preperiod: position,
                period: path.len() - position,
            });
        }
        path.push(current);
        match components.components[current - 1].forward {
            ForwardImage::Mapped(next) => current = next,
            ForwardImage::Unknown | ForwardImage::Unresolved => return None,
        }
    }
    unreachable!("forward chain failed to repeat among finitely many ids");
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{basin_raster, find_attractors, Window};
    use fatou_core::{parse_map, Complex64};

    fn map(text: &str) -> RationalMap {
        parse_map(text).expect("example map parses")
    }

    fn build(
        text: &str,
        n_max: u32,
        max_iter: u32,
    ) -> (RationalMap, BasinRaster) {
        let m = map(text);
        let attractors = find_attractors(&m, n_max).expect("attractors");
        let window = Window::centered_square(2.0).expect("valid window");
        let raster =
            basin_raster(&m, &attractors, &window, 96, 96, max_iter, 1e-6)
                .expect("raster builds");
        (m, raster)
    }

    #[test]
    fn squaring_map_has_inside_and_outside_components() {
        let (m, raster) = build("z^2", 1, 120);
        let components = fatou_components(&raster);
        assert_eq!(components.len(), 2);
        let inside = components
            .component_at(&raster, Complex64::new(0.0, 0.0))
            .expect("origin claimed");
        let outside = components
            .component_at(&raster, Complex64::new(1.8, 0.0))
            .expect("exterior claimed");
        assert_ne!(inside, outside);
        assert!(!components.components()[inside - 1].touches_border);
        assert!(components.components()[outside - 1].touches_border);

        let annotated = component_orbit(&m, components, &raster)
            .expect("orbit annotation runs");
        for component in annotated.components() {
            assert_eq!(
                component.periodicity,
                Some(CyclePosition { preperiod: 0, period: 1 })
            );
        }
    }

    #[test]
    fn basilica_components_swap_in_a_two_cycle() {
        let (m, raster) = build("z^2 - 1", 2, 200);
        let components = fatou_components(&raster);
        let annotated = component_orbit(&m, components, &raster)
            .expect("orbit annotation runs");
        let at_zero = annotated
            .component_at(&raster, Complex64::new(0.0, 0.0))
            .expect("component at 0");
        let at_minus_one = annotated
            .component_at(&raster, Complex64::new(-1.0, 0.0))
            .expect("component at -1");
        assert_ne!(at_zero, at_minus_one);
        assert_eq!(
            annotated.components()[at_zero - 1].forward,
            ForwardImage::Mapped(at_minus_one)
        );
        assert_eq!(
            annotated.components()[at_minus_one - 1].forward,
            ForwardImage::Mapped(at_zero)
        );
        for id in [at_zero, at_minus_one] {
            assert_eq!(
                annotated.components()[id - 1].periodicity,
                Some(CyclePosition { preperiod: 0, period: 2 })
            );
        }
    }

    #[test]
    fn preimage_components_carry_positive_preperiod() {
        let (m, raster) = build("z^2 - 1", 2, 200);
        let components = fatou_components(&raster);
        let annotated = component_orbit(&m, components, &raster)
            .expect("orbit annotation runs");
        // The component around +1 maps onto the component around 0 (since
        // 1^2 - 1 = 0) and is not itself part of the two-cycle.
        let at_one = annotated
            .component_at(&raster, Complex64::new(1.0, 0.0))
            .expect("component at +1");
        let at_zero = annotated
            .component_at(&raster, Complex64::new(0.0, 0.0))
            .expect("component at 0");
        assert_ne!(at_one, at_zero);
        assert_eq!(
            annotated.components()[at_one - 1].forward,
            ForwardImage::Mapped(at_zero)
        );
        assert_eq!(
            annotated.components()[at_one - 1].periodicity,
            Some(CyclePosition { preperiod: 1, period: 2 })
        );
    }

    #[test]
    fn tiny_speckles_are_dropped() {
        let (_, raster) = build("z^2", 1, 6);
        // With only six iterations many pixels near the circle remain
        // undecided; whatever survives must meet the size floor.
        let components = fatou_components(&raster);
        for component in components.components() {
            assert!(component.pixel_count >= MIN_COMPONENT_PIXELS);
        }
    }

    #[test]
    fn ids_cover_exactly_the_component_pixels() {
        let (_, raster) = build("z^2", 1, 120);
        let components = fatou_components(&raster);
        let mut counted = vec![0usize; components.len() + 1];
        for y in 0..raster.height() {
            for x in 0..raster.width() {
                let id = components.component_id(x, y);
                assert!(id <= components.len());
                if id != 0 {
                    counted[id] += 1;
                    assert_ne!(raster.label(x, y), 0);
                    assert_eq!(
                        components.components()[id - 1].basin,
                        raster.label(x, y)
                    );
                }
            }
        }
        for (id, component) in components.components().iter().enumerate() {
            assert_eq!(counted[id + 1], component.pixel_count);
        }
    }
}
