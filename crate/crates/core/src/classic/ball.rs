use std::collections::HashMap;
use std::hash::Hash;

use super::ClassicError;
use crate::exec::Exec;
use crate::words::Letter;

/// A group with a finite generating set and exact normal forms.
pub trait CayleyGraph: Sync {
    type Element: Clone + Eq + Hash + Send + Sync;

    fn identity(&self) -> Self::Element;

    /// Size of `S`; letters range over `S ∪ S⁻¹`.
    fn generator_count(&self) -> usize;

    /// Right multiplication by a letter.
    fn step(&self, e: &Self::Element, l: Letter) -> Self::Element;
}

/// The ball of radius `radius`, split into spheres.
///
/// `spheres[d]` holds exactly the elements of geodesic length `d`.
#[derive(Clone, Debug)]
pub struct Ball<E> {
    pub radius: usize,
    pub spheres: Vec<Vec<E>>,
}

impl<E: Clone + Eq + Hash> Ball<E> {
    pub fn len(&self) -> usize {
        self.spheres.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `(element, geodesic length)` pairs in BFS order.
    pub fn iter(&self) -> impl Iterator<Item = (&E, usize)> {
        self.spheres
            .iter()
            .enumerate()
            .flat_map(|(d, s)| s.iter().map(move |e| (e, d)))
    }

    pub fn lengths(&self) -> HashMap<E, usize> {
        self.iter().map(|(e, d)| (e.clone(), d)).collect()
    }
}

/// Breadth-first search of the Cayley graph, deduplicated by normal form.
///
/// Frontier expansion is the data-parallel step; deduplication is
/// sequential so the sphere order is the same in both modes.
pub fn ball_bfs<G: CayleyGraph>(
    g: &G,
    radius: usize,
    cap: usize,
    exec: Exec,
) -> Result<Ball<G::Element>, ClassicError> {
    let letters: Vec<Letter> = (0..2 * g.generator_count() as u32).map(Letter::from_code).collect();
    let id = g.identity();
    let mut seen: HashMap<G::Element, ()> = HashMap::new();
    seen.insert(id.clone(), ());
    let mut spheres = vec![vec![id]];
    for depth in 1..=radius {
        let frontier = &spheres[depth - 1];
        let expanded: Vec<Vec<G::Element>> =
            exec.map(frontier, |e| letters.iter().map(|&l| g.step(e, l)).collect());
        let mut next = Vec::new();
        for e in expanded.into_iter().flatten() {
            if !seen.contains_key(&e) {
                seen.insert(e.clone(), ());
                next.push(e);
            }
        }
        if seen.len() > cap {
            return Err(ClassicError::BallCapExceeded { radius, cap });
        }
        spheres.push(next);
    }
    Ok(Ball { radius, spheres })
}

#[cfg(test)]
mod tests {
    use super::super::*;
    use super::*;
    use crate::words::{index_to_word, Alphabet};

    #[test]
    fn bs12_small_balls() {
        let g = Bs12::default();
        let b = ball_bfs(&g, 1, 100, Exec::Sequential).unwrap();
        assert_eq!(b.len(), 5);
        let b = ball_bfs(&g, 4, 10_000, Exec::Sequential).unwrap();
        let lengths = b.lengths();
        // a b a^-1 = b^2 is not geodesic: b b already has two letters
        assert_eq!(lengths[&DyadicPair::integer(2.into(), 0)], 2);
        assert_eq!(lengths[&DyadicPair::integer(4.into(), 0)], 4);
    }

    #[test]
    fn heisenberg_small_balls() {
        let g = Heisenberg::default();
        let b = ball_bfs(&g, 4, 100_000, Exec::Sequential).unwrap().lengths();
        assert_eq!(b[&HeisTriple::new(1, 1, 1)], 2);
        assert_eq!(b[&HeisTriple::new(0, 0, 1)], 1);
        // [a,b] has the same value as c, so the center is reached at depth 1
        // via c itself; the pure commutator identity is checked below.
    }

    #[test]
    fn heisenberg_commutator_needs_four_letters_without_c() {
        // In ⟨a, b⟩ alone the centre element (0,0,1) first appears at depth 4.
        struct AB(Heisenberg);
        impl CayleyGraph for AB {
            type Element = HeisTriple;
            fn identity(&self) -> HeisTriple {
                HeisTriple::identity()
            }
            fn generator_count(&self) -> usize {
                2
            }
            fn step(&self, e: &HeisTriple, l: Letter) -> HeisTriple {
                self.0.step(e, l)
            }
        }
        let b = ball_bfs(&AB(Heisenberg::default()), 4, 100_000, Exec::Sequential).unwrap();
        assert_eq!(b.lengths()[&HeisTriple::new(0, 0, 1)], 4);
    }

    #[test]
    fn cap_is_enforced() {
        let g = Bs12::default();
        assert_eq!(
            ball_bfs(&g, 6, 50, Exec::Sequential).unwrap_err(),
            ClassicError::BallCapExceeded { radius: 6, cap: 50 }
        );
    }

    #[test]
    fn layers_match_exhaustive_product_enumeration() {
        // every reduced word of length ≤ 6, evaluated directly; the minimum
        // length per element must equal the BFS layer
        let g = Bs12::default();
        let ball = ball_bfs(&g, 6, 1_000_000, Exec::Parallel).unwrap().lengths();
        let ab = Alphabet::new(["a", "b"]).unwrap();
        let mut best: HashMap<DyadicPair, usize> = HashMap::new();
        let total = crate::words::count_up_to(2, 6).unwrap();
        for i in 0..total {
            let w = index_to_word(i, &ab);
            let e = bs12_eval(&w).unwrap();
            let d = best.entry(e).or_insert(usize::MAX);
            *d = (*d).min(w.len());
        }
        assert_eq!(best, ball);

        let h = Heisenberg::default();
        let ball = ball_bfs(&h, 5, 1_000_000, Exec::Parallel).unwrap().lengths();
        let abc = h.alphabet().clone();
        let mut best: HashMap<HeisTriple, usize> = HashMap::new();
        for i in 0..crate::words::count_up_to(3, 5).unwrap() {
            let w = index_to_word(i, &abc);
            let d = best.entry(heis_eval(&w).unwrap()).or_insert(usize::MAX);
            *d = (*d).min(w.len());
        }
        assert_eq!(best, ball);
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let g = Bs12::default();
        let a = ball_bfs(&g, 7, 1_000_000, Exec::Sequential).unwrap();
        let b = ball_bfs(&g, 7, 1_000_000, Exec::Parallel).unwrap();
        assert_eq!(a.spheres, b.spheres);
    }
}
