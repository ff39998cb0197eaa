//! Exact combinatorial counts: binomials, Gaussian (q-analog) binomials,
//! and lexicographic k-subset machinery shared by the graph and apartment
//! modules.

/// Binomial coefficient C(n, k) as an exact u128. Returns 0 for k > n.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Gaussian binomial [n choose k]_q: the number of k-dimensional subspaces
/// of an n-dimensional space over GF(q).
///
/// Computed with the q-Pascal recurrence
/// [n k]_q = [n-1 k-1]_q + q^k [n-1 k]_q, which stays in exact integers.
pub fn gaussian_binomial(n: usize, k: usize, q: u128) -> u128 {
    if k > n {
        return 0;
    }
    // table[j] holds [i j]_q while i sweeps 0..=n
    let mut table = vec![0u128; k + 1];
    table[0] = 1;
    for _ in 1..=n {
        for j in (1..=k).rev() {
            table[j] = table[j - 1] + q.pow(j as u32) * table[j];
        }
    }
    table[k]
}

/// All k-element subsets of {1, …, n} in lexicographic order, as sorted vecs.
pub fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(binomial(n, k) as usize);
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (1..=k).collect();
    loop {
        out.push(cur.clone());
        // advance to next lex subset
        let mut i = k;
        while i > 0 && cur[i - 1] == n - (k - i) {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        cur[i - 1] += 1;
        for j in i..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
    out
}

/// Lexicographic rank of a sorted k-subset of {1, …, n} within `k_subsets(n, k)`.
pub fn subset_rank(n: usize, elems: &[usize]) -> usize {
    let k = elems.len();
    let mut rank = 0u128;
    let mut prev = 0;
    for (i, &e) in elems.iter().enumerate() {
        for v in (prev + 1)..e {
            rank += binomial(n - v, k - i - 1);
        }
        prev = e;
    }
    rank as usize
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(4, 0), 1);
        assert_eq!(binomial(4, 5), 0);
        assert_eq!(binomial(12, 5), 792);
    }

    #[test]
    fn gaussian_binomial_known_values() {
        // [4 2]_2 = 35, [4 1]_2 = 15, [3 1]_2 = 7, [5 2]_2 = 155, [4 2]_3 = 130
        assert_eq!(gaussian_binomial(4, 2, 2), 35);
        assert_eq!(gaussian_binomial(4, 1, 2), 15);
        assert_eq!(gaussian_binomial(3, 1, 2), 7);
        assert_eq!(gaussian_binomial(5, 2, 2), 155);
        assert_eq!(gaussian_binomial(4, 2, 3), 130);
        assert_eq!(gaussian_binomial(6, 3, 2), 1395);
    }

    #[test]
    fn gaussian_binomial_symmetry_and_edges() {
        for n in 0..=8 {
            for k in 0..=n {
                assert_eq!(
                    gaussian_binomial(n, k, 2),
                    gaussian_binomial(n, n - k, 2),
                    "symmetry at ({n},{k})"
                );
            }
        }
        assert_eq!(gaussian_binomial(5, 0, 3), 1);
        assert_eq!(gaussian_binomial(5, 5, 3), 1);
        assert_eq!(gaussian_binomial(3, 4, 3), 0);
    }

    #[test]
    fn gaussian_binomial_at_q_one_is_binomial() {
        for n in 0..=10 {
            for k in 0..=n {
                assert_eq!(gaussian_binomial(n, k, 1), binomial(n, k));
            }
        }
    }

    #[test]
    fn subsets_are_lex_ordered_and_ranked() {
        let subs = k_subsets(5, 2);
        assert_eq!(subs.len(), 10);
        assert_eq!(subs[0], vec![1, 2]);
        assert_eq!(subs[9], vec![4, 5]);
        for (r, s) in subs.iter().enumerate() {
            assert_eq!(subset_rank(5, s), r);
        }
        for w in subs.windows(2) {
            assert!(w[0] < w[1]);
        }
    }

    #[test]
    fn subsets_edge_cases() {
        assert_eq!(k_subsets(4, 0), vec![Vec::<usize>::new()]);
        assert_eq!(k_subsets(3, 4), Vec::<Vec<usize>>::new());
        assert_eq!(k_subsets(3, 3), vec![vec![1, 2, 3]]);
    }
}
