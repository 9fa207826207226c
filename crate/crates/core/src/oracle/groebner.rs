//! Buchberger completion for pure-difference binomial ideals.

use std::collections::{BTreeSet, HashSet};

use crate::error::{Error, Result};

use super::monomial::{Binomial, Monomial, TermOrder};

/// Output of [`buchberger`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    /// Interreduced, sorted by leading monomial (descending in the order).
    pub elements: Vec<Binomial>,
    pub order: TermOrder,
    /// The degree cap in force, if any.
    pub degree_cap: Option<u32>,
    /// S-pairs left unprocessed because their lcm degree exceeded the cap.
    pub deferred_pairs: usize,
}

impl GroebnerBasis {
    /// True when no pair was deferred, so the basis is a full Gröbner basis.
    pub fn is_complete(&self) -> bool {
        self.deferred_pairs == 0
    }

    /// Degree up to which leading terms are known to be exact.
    pub fn valid_through(&self) -> Option<u32> {
        if self.is_complete() {
            None
        } else {
            self.degree_cap
        }
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements.iter().map(|b| b.lead.clone()).collect()
    }
}

/// Rewrites `m` with `lead -> trail` until no leading monomial divides it.
pub fn normal_form(m: &Monomial, basis: &[Binomial]) -> Monomial {
    let mut m = m.clone();
    'outer: loop {
        for g in basis {
            if g.lead.divides(&m) {
                m = m.div(&g.lead).mul(&g.trail);
                continue 'outer;
            }
        }
        return m;
    }
}

fn check_pure(b: &Binomial, order: TermOrder) -> Result<()> {
    if b.lead == b.trail || order.cmp(&b.lead, &b.trail) != std::cmp::Ordering::Greater {
        return Err(Error::Falsification(format!(
            "binomial {:?} - {:?} is not oriented by the term order",
            b.lead.0, b.trail.0
        )));
    }
    if b.lead.nvars() != b.trail.nvars() {
        return Err(Error::Precondition(
            "binomial monomials live in different rings".into(),
        ));
    }
    Ok(())
}

/// Gröbner basis of the ideal generated by `gens`.
///
/// With `degree_cap = Some(c)`, S-pairs whose lcm has degree above `c` are
/// deferred. For homogeneous input the result then agrees with the true
/// basis in every degree `<= c`.
pub fn buchberger(
    gens: &[Binomial],
    order: TermOrder,
    degree_cap: Option<u32>,
) -> Result<GroebnerBasis> {
    let mut basis: Vec<Binomial> = Vec::new();
    for g in gens {
        check_pure(g, order)?;
        if !basis.contains(g) {
            basis.push(g.clone());
        }
    }

    // Pending pairs keyed by (lcm degree, i, j) so that low degrees go first.
    let mut queue: BTreeSet<(u32, usize, usize)> = BTreeSet::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    let push_pairs =
        |basis: &[Binomial], j: usize, queue: &mut BTreeSet<_>, pending: &mut HashSet<_>| {
            for i in 0..j {
                let deg = basis[i].lead.lcm(&basis[j].lead).degree();
                queue.insert((deg, i, j));
                pending.insert((i, j));
            }
        };
    for j in 0..basis.len() {
        push_pairs(&basis, j, &mut queue, &mut pending);
    }

    let mut deferred = 0usize;
    while let Some((deg, i, j)) = queue.pop_first() {
        if degree_cap.is_some_and(|c| deg > c) {
            // Everything left is at least this degree.
            deferred = queue.len() + 1;
            break;
        }
        pending.remove(&(i, j));
        let (gi, gj) = (&basis[i], &basis[j]);
        if gi.lead.is_coprime(&gj.lead) {
            continue;
        }
        let l = gi.lead.lcm(&gj.lead);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].lead.divides(&l)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let u = normal_form(&l.div(&gi.lead).mul(&gi.trail), &basis);
        let v = normal_form(&l.div(&gj.lead).mul(&gj.trail), &basis);
        if let Some(b) = Binomial::oriented(u, v, order) {
            check_pure(&b, order)?;
            basis.push(b);
            push_pairs(&basis, basis.len() - 1, &mut queue, &mut pending);
        }
    }

    Ok(GroebnerBasis {
        elements: interreduce(basis, order),
        order,
        degree_cap,
        deferred_pairs: deferred,
    })
}

/// Drops redundant leading terms, then normalizes trails.
fn interreduce(mut basis: Vec<Binomial>, order: TermOrder) -> Vec<Binomial> {
    basis.sort_by(|a, b| {
        order
            .cmp(&a.lead, &b.lead)
            .then_with(|| order.cmp(&a.trail, &b.trail))
    });
    let mut minimal: Vec<Binomial> = Vec::new();
    for (idx, g) in basis.iter().enumerate() {
        let redundant = basis
            .iter()
            .enumerate()
            .any(|(k, h)| k != idx && h.lead.divides(&g.lead) && (h.lead != g.lead || k < idx));
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let reduced: Vec<Binomial> = minimal
        .iter()
        .map(|g| Binomial {
            lead: g.lead.clone(),
            trail: normal_form(&g.trail, &minimal),
        })
        .collect();
    let mut out: Vec<Binomial> = reduced.into_iter().filter(|b| b.lead != b.trail).collect();
    out.sort_by(|a, b| order.cmp(&b.lead, &a.lead));
    out
}
