use alloc::vec::Vec;

/// Every complete assignment of `slots` slots that passes `accept`.
///
/// `choices(slot, partial)` lists candidates for the next slot given the
/// assignment so far; `accept(partial)` prunes as soon as a prefix fails.
/// Candidates are tried in the order given, so sorted candidates yield
/// results in lexicographic order.
pub fn backtrack_enumerate<C, F, P>(slots: usize, mut choices: F, mut accept: P) -> Vec<Vec<C>>
where
    C: Clone,
    F: FnMut(usize, &[C]) -> Vec<C>,
    P: FnMut(&[C]) -> bool,
{
    let mut out = Vec::new();
    let mut partial = Vec::with_capacity(slots);
    descend(slots, &mut partial, &mut choices, &mut accept, &mut out);
    out
}

fn descend<C, F, P>(
    slots: usize,
    partial: &mut Vec<C>,
    choices: &mut F,
    accept: &mut P,
    out: &mut Vec<Vec<C>>,
) where
    C: Clone,
    F: FnMut(usize, &[C]) -> Vec<C>,
    P: FnMut(&[C]) -> bool,
{
    if partial.len() == slots {
        out.push(partial.clone());
        return;
    }
    for c in choices(partial.len(), partial) {
        partial.push(c);
        if accept(partial) {
            descend(slots, partial, choices, accept, out);
        }
        partial.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn queens(n: usize) -> Vec<Vec<usize>> {
        backtrack_enumerate(
            n,
            |_, _| (0..n).collect(),
            |p| {
                let r = p.len() - 1;
                let c = p[r];
                p[..r]
                    .iter()
                    .enumerate()
                    .all(|(i, &q)| q != c && q.abs_diff(c) != r - i)
            },
        )
    }

    #[test]
    fn four_queens() {
        assert_eq!(queens(4), vec![vec![1, 3, 0, 2], vec![2, 0, 3, 1]]);
    }

    #[test]
    fn eight_queens_sorted_unique() {
        let s = queens(8);
        assert_eq!(s.len(), 92);
        assert!(s.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn unsatisfiable_is_empty() {
        let s: Vec<Vec<u8>> = backtrack_enumerate(3, |_, _| vec![0, 1], |_| false);
        assert!(s.is_empty());
        assert!(queens(3).is_empty());
    }
}
