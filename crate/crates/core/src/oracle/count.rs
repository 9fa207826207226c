//! Hilbert series of monomial quotients via the numerator recursion
//! `N(I) = N(I + (x)) + t * N(I : x)`.

use crate::poly::IntPolynomial;

use super::monomial::Monomial;

/// Keeps only generators not divisible by another one; sorted, deduplicated.
pub fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|g| (g.degree(), g.clone()));
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

/// Numerator `N` with `HS(R / I) = N(t) / (1 - t)^n`, `n` the number of
/// variables. `gens` must be minimal.
pub fn hilbert_numerator(gens: &[Monomial]) -> IntPolynomial {
    if gens.is_empty() {
        return IntPolynomial::one();
    }
    if gens.iter().any(|g| g.degree() == 0) {
        return IntPolynomial::zero();
    }

    // Pairwise coprime generators form a regular sequence.
    let coprime = gens
        .iter()
        .enumerate()
        .all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_coprime(b)));
    if coprime {
        return gens.iter().fold(IntPolynomial::one(), |acc, g| {
            &acc * &(&IntPolynomial::one() - &IntPolynomial::monomial(g.degree() as usize))
        });
    }

    // Pivot on the variable shared by the most non-linear generators.
    let n = gens[0].nvars();
    let mut freq = vec![0usize; n];
    for g in gens.iter().filter(|g| g.degree() > 1) {
        for (v, _) in g.support() {
            freq[v] += 1;
        }
    }
    let x = (0..n)
        .max_by_key(|&v| (freq[v], std::cmp::Reverse(v)))
        .unwrap();
    let xm = Monomial::var(n, x);

    let mut plus: Vec<Monomial> = gens.iter().filter(|g| g.0[x] == 0).cloned().collect();
    plus.push(xm.clone());
    let plus = minimalize(plus);

    let colon = minimalize(
        gens.iter()
            .map(|g| if g.0[x] > 0 { g.div(&xm) } else { g.clone() })
            .collect(),
    );

    &hilbert_numerator(&plus) + &hilbert_numerator(&colon).shift(1)
}
