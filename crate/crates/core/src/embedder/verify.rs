use std::cmp::Ordering;

use thiserror::Error;

use crate::exec::{self, Parallelism};
use crate::graph::{DistanceMatrix, Vertex};

/// A pair whose label distance disagrees with the graph distance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IsometryViolation {
    pub x: Vertex,
    pub y: Vertex,
    pub sym_diff: usize,
    pub expected: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verification {
    Isometric,
    Violation(IsometryViolation),
}

impl Verification {
    pub fn is_isometric(&self) -> bool {
        matches!(self, Verification::Isometric)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum LabelError {
    #[error("expected {expected} labels, found {found}")]
    WrongCount { expected: usize, found: usize },
    #[error("label of vertex {vertex} has {size} elements, vertex 0 has {expected}")]
    UnequalSizes { vertex: Vertex, size: usize, expected: usize },
    #[error("label of vertex {vertex} repeats an element")]
    RepeatedElement { vertex: Vertex },
}

/// Checks `|labels[x] △ labels[y]| = 2 d(x, y)` for every pair. Labels are
/// sets over any ordered universe, given in any order.
pub fn verify_embedding<T: Ord + Clone + Sync + Send>(
    d: &DistanceMatrix,
    labels: &[Vec<T>],
) -> Result<Verification, LabelError> {
    verify_embedding_with(d, labels, Parallelism::default())
}

pub fn verify_embedding_with<T: Ord + Clone + Sync + Send>(
    d: &DistanceMatrix,
    labels: &[Vec<T>],
    mode: Parallelism,
) -> Result<Verification, LabelError> {
    let sets = normalize(d, labels)?;
    let expected = sets.first().map_or(0, Vec::len);
    if let Some(vertex) = sets.iter().position(|s| s.len() != expected) {
        return Err(LabelError::UnequalSizes { vertex, size: sets[vertex].len(), expected });
    }
    Ok(check_scaled(d, &sets, 2, mode))
}

pub(crate) fn normalize<T: Ord + Clone>(d: &DistanceMatrix, labels: &[Vec<T>]) -> Result<Vec<Vec<T>>, LabelError> {
    if labels.len() != d.n() {
        return Err(LabelError::WrongCount { expected: d.n(), found: labels.len() });
    }
    labels
        .iter()
        .enumerate()
        .map(|(vertex, l)| {
            let mut s = l.clone();
            s.sort();
            if s.windows(2).any(|w| w[0] == w[1]) {
                return Err(LabelError::RepeatedElement { vertex });
            }
            Ok(s)
        })
        .collect()
}

/// Lexicographically first pair `x < y` with `|X △ Y| != scale * d(x, y)`.
/// `sets` must be sorted and duplicate-free.
pub(crate) fn check_scaled<T: Ord + Sync>(
    d: &DistanceMatrix,
    sets: &[Vec<T>],
    scale: usize,
    mode: Parallelism,
) -> Verification {
    let n = sets.len();
    let first = exec::find_first(mode, n, |x| {
        (x + 1..n).find_map(|y| {
            let sym_diff = symmetric_difference_len(&sets[x], &sets[y]);
            let expected = scale * d.get(x, y) as usize;
            (sym_diff != expected).then_some(IsometryViolation { x, y, sym_diff, expected })
        })
    });
    match first {
        Some(v) => Verification::Violation(v),
        None => Verification::Isometric,
    }
}

pub(crate) fn symmetric_difference_len<T: Ord>(a: &[T], b: &[T]) -> usize {
    let (mut i, mut j, mut common) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            Ordering::Less => i += 1,
            Ordering::Greater => j += 1,
            Ordering::Equal => {
                common += 1;
                i += 1;
                j += 1;
            }
        }
    }
    a.len() + b.len() - 2 * common
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::distance_matrix;
    use crate::oracle::{gen_family, Family};

    #[test]
    fn k2_and_c4() {
        let k2 = gen_family(Family::Path(2)).unwrap();
        let d = distance_matrix(&k2);
        assert!(verify_embedding(&d, &[vec![0], vec![1]]).unwrap().is_isometric());

        let c4 = gen_family(Family::Cycle(4)).unwrap();
        let d = distance_matrix(&c4);
        let good = vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 0]];
        assert!(verify_embedding(&d, &good).unwrap().is_isometric());
        let swapped = vec![vec![1, 2], vec![0, 1], vec![2, 3], vec![3, 0]];
        assert_eq!(
            verify_embedding(&d, &swapped).unwrap(),
            Verification::Violation(IsometryViolation { x: 0, y: 2, sym_diff: 2, expected: 4 })
        );
    }

    #[test]
    fn label_errors() {
        let c4 = gen_family(Family::Cycle(4)).unwrap();
        let d = distance_matrix(&c4);
        assert_eq!(
            verify_embedding(&d, &[vec![0, 1], vec![1, 2], vec![2]]).unwrap_err(),
            LabelError::WrongCount { expected: 4, found: 3 }
        );
        assert_eq!(
            verify_embedding(&d, &[vec![0, 1], vec![1, 2], vec![2], vec![0, 3]]).unwrap_err(),
            LabelError::UnequalSizes { vertex: 2, size: 1, expected: 2 }
        );
        assert_eq!(
            verify_embedding(&d, &[vec![0, 1], vec![1, 1], vec![2, 3], vec![0, 3]]).unwrap_err(),
            LabelError::RepeatedElement { vertex: 1 }
        );
    }

    #[test]
    fn symmetric_difference() {
        assert_eq!(symmetric_difference_len(&[1, 2, 3], &[2, 3, 4]), 2);
        assert_eq!(symmetric_difference_len::<u8>(&[], &[]), 0);
        assert_eq!(symmetric_difference_len(&[1], &[2, 3]), 3);
    }
}
