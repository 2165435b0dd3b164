use crate::residue::Residue;

/// Prefix sums `(s_1, ..., s_len)` of an ordered list.
pub fn partial_sums(elements: &[Residue]) -> Vec<Residue> {
    let mut out = Vec::with_capacity(elements.len());
    let mut acc: Option<Residue> = None;
    for &x in elements {
        let s = match acc {
            Some(a) => a + x,
            None => x,
        };
        out.push(s);
        acc = Some(s);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn res(xs: &[i64], v: u64) -> Vec<Residue> {
        xs.iter().map(|&x| Residue::new(x, v)).collect()
    }

    fn signed(xs: Vec<Residue>) -> Vec<i64> {
        xs.into_iter().map(Residue::signed).collect()
    }

    #[test]
    fn examples() {
        assert_eq!(
            signed(partial_sums(&res(&[1, 2, 10, -11], 25))),
            vec![1, 3, -12, 2]
        );
        assert!(partial_sums(&[]).is_empty());
        let row = res(&[9, -10, 11, -12, 13, -14, 15, -16], 177);
        assert_eq!(
            signed(partial_sums(&row)),
            vec![9, -1, 10, -2, 11, -3, 12, -4]
        );
    }

    proptest! {
        #[test]
        fn prefix_consistent(v in 2u64..300, xs in proptest::collection::vec(-500i64..500, 1..20)) {
            let rs = res(&xs, v);
            let full = partial_sums(&rs);
            let shorter = partial_sums(&rs[..rs.len() - 1]);
            prop_assert_eq!(&full[..full.len() - 1], &shorter[..]);
        }
    }
}
