use crate::error::{Error, Result};

/// Most distinct variables the exhaustive search will enumerate.
pub const MAX_COVER_VARIABLES: usize = 20;

/// Minimum hitting set of `supports` by enumerating every variable subset.
///
/// Variables are arbitrary labels; an empty support can never be hit and
/// yields `None` inside the `Ok`.
pub fn exhaustive_vertex_cover<T: Ord + Clone>(supports: &[Vec<T>]) -> Result<Option<usize>> {
    let mut vars: Vec<T> = supports.iter().flatten().cloned().collect();
    vars.sort();
    vars.dedup();
    if vars.len() > MAX_COVER_VARIABLES {
        return Err(Error::Guard {
            what: "distinct cover variables",
            value: vars.len() as u64,
            limit: MAX_COVER_VARIABLES as u64,
        });
    }
    let masks: Vec<u32> = supports
        .iter()
        .map(|s| {
            s.iter()
                .map(|v| 1u32 << vars.binary_search(v).expect("collected above"))
                .fold(0, |a, b| a | b)
        })
        .collect();
    let best = (0u32..1 << vars.len())
        .filter(|&chosen| masks.iter().all(|&m| m & chosen != 0))
        .map(|chosen| chosen.count_ones() as usize)
        .min();
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let disjoint = vec![vec![1, 2], vec![3, 4], vec![5, 6]];
        assert_eq!(exhaustive_vertex_cover(&disjoint), Ok(Some(3)));
        assert_eq!(
            exhaustive_vertex_cover(&[vec!['a', 'b'], vec!['b', 'c']]),
            Ok(Some(1))
        );
        assert_eq!(
            exhaustive_vertex_cover(&[vec!['a'], vec!['b'], vec!['a', 'b']]),
            Ok(Some(2))
        );
        assert_eq!(exhaustive_vertex_cover::<u32>(&[]), Ok(Some(0)));
        assert_eq!(exhaustive_vertex_cover::<u32>(&[vec![]]), Ok(None));
    }

    #[test]
    fn guard() {
        let many: Vec<Vec<u32>> = (0..21).map(|v| vec![v]).collect();
        assert!(matches!(
            exhaustive_vertex_cover(&many),
            Err(Error::Guard { .. })
        ));
    }
}
