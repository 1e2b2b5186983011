//! Brute-force oracle for the Hilbert admissibility test: generate random
//! sets of up to 8 distinct points in projective 3-space, compute their
//! Hilbert function as the exact rank of the monomial evaluation matrix,
//! and require `admissible_point_hilbert` to accept every one of them.
//!
//! Coordinates stay in `{0..3}` so fraction-free elimination over `i128`
//! cannot overflow (8x8 minors of entries below 3^9).

use detquartic::{admissible_point_hilbert, HilbertFunction};

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
fn integer_rank(mut m: Vec<Vec<i128>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    let mut prev: i128 = 1;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        for r in rank + 1..rows {
            for c in col + 1..cols {
                m[r][c] = (m[r][c] * m[rank][col] - m[r][col] * m[rank][c]) / prev;
            }
            m[r][col] = 0;
        }
        prev = m[rank][col];
        rank += 1;
    }
    rank
}

/// Exponent tuples of the degree-t monomials in 4 variables.
fn monomial_exponents(t: u32) -> Vec<[u32; 4]> {
    let mut out = Vec::new();
    for e1 in 0..=t {
        for e2 in 0..=t - e1 {
            for e3 in 0..=t - e1 - e2 {
                out.push([t - e1 - e2 - e3, e1, e2, e3]);
            }
        }
    }
    out
}

/// Hilbert function prefix of a set of distinct points, via the rank of the
/// evaluation map on degree-t monomials, for t = 0..=cut.
fn point_hilbert(points: &[[i128; 4]], cut: u32) -> Vec<u64> {
    (0..=cut)
        .map(|t| {
            let matrix: Vec<Vec<i128>> = points
                .iter()
                .map(|p| {
                    monomial_exponents(t)
                        .iter()
                        .map(|e| (0..4).map(|i| p[i].pow(e[i])).product())
                        .collect()
                })
                .collect();
            integer_rank(matrix) as u64
        })
        .collect()
}

/// Small deterministic generator; splitmix64.
struct Rng(u64);

impl Rng {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    fn coord(&mut self) -> i128 {
        (self.next() % 4) as i128
    }
}

fn random_points(rng: &mut Rng, count: usize) -> Vec<[i128; 4]> {
    let mut points: Vec<[i128; 4]> = Vec::with_capacity(count);
    while points.len() < count {
        // affine chart: first coordinate 1 keeps the points distinct in
        // projective space exactly when the triples are distinct
        let p = [1, rng.coord(), rng.coord(), rng.coord()];
        if !points.contains(&p) {
            points.push(p);
        }
    }
    points
}

#[test]
fn oracle_rank_sanity() {
    // three collinear points: (1,0,0,0), (1,1,0,0), (1,2,0,0)
    let points = vec![[1, 0, 0, 0], [1, 1, 0, 0], [1, 2, 0, 0]];
    assert_eq!(point_hilbert(&points, 3), vec![1, 2, 3, 3]);
    // four general points span the space of linear forms
    let general = vec![[1, 0, 0, 0], [1, 1, 0, 0], [1, 0, 1, 0], [1, 0, 0, 1]];
    assert_eq!(point_hilbert(&general, 2), vec![1, 4, 4]);
}

#[test]
fn random_point_sets_are_always_admissible() {
    let mut rng = Rng(0x5eed_0001);
    for trial in 0..60 {
        let count = 1 + (rng.next() % 8) as usize;
        let points = random_points(&mut rng, count);
        let values = point_hilbert(&points, count as u32);
        assert_eq!(
            *values.last().unwrap(),
            count as u64,
            "trial {trial}: function must stabilize at the point count {points:?}"
        );
        let hf = HilbertFunction::new(values.clone()).expect("h(0) = 1 by construction");
        let report = admissible_point_hilbert(&hf, count as u64);
        assert!(
            report.admissible,
            "trial {trial}: oracle function {values:?} of {points:?} rejected: {:?}",
            report.violation
        );
    }
}

#[test]
fn structured_configurations_are_admissible() {
    // collinear, coplanar and general position for every count up to 8
    for count in 1..=8usize {
        let collinear: Vec<[i128; 4]> = (0..count).map(|i| [1, i as i128, 0, 0]).collect();
        // coordinates above 3 stay exact here: one nonzero coordinate means
        // the evaluation matrix is a scaled Vandermonde in a single variable
        let planar: Vec<[i128; 4]> =
            (0..count).map(|i| [1, (i % 3) as i128, (i / 3) as i128, 0]).collect();
        for points in [collinear, planar] {
            let values = point_hilbert(&points, points.len() as u32);
            let hf = HilbertFunction::new(values).unwrap();
            assert!(admissible_point_hilbert(&hf, count as u64).admissible);
        }
    }
}
