use crate::error::{Error, Result};
use crate::hyperspace::FiniteIndexedHyperspace as Space;

fn check_map(b: &Space, a: &Space, f: &[usize]) -> Result<()> {
    if f.len() != b.size() {
        return Err(Error::invalid(format!(
            "map defined on {} elements, source has {}",
            f.len(),
            b.size()
        )));
    }
    if let Some(&bad) = f.iter().find(|&&y| y >= a.size()) {
        return Err(Error::IndexOutOfRange {
            what: "image element",
            index: bad,
            limit: a.size(),
        });
    }
    Ok(())
}

pub(crate) fn is_injective(f: &[usize], codomain: usize) -> bool {
    let mut seen = vec![false; codomain];
    f.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
}

pub(crate) fn check_permutation(perm: &[usize], n: usize) -> Result<()> {
    if perm.len() != n || !perm.iter().all(|&p| p < n) || !is_injective(perm, n) {
        return Err(Error::invalid(format!(
            "{perm:?} is not a permutation of {{0..{n}}}"
        )));
    }
    Ok(())
}

// For each A-relation i, compares B's relation source_rel[i] with A's relation i.
fn preserves(
    b: &Space,
    a: &Space,
    f: &[usize],
    source_rel: &[usize],
    biconditional: bool,
) -> bool {
    (0..b.size()).all(|x| {
        (x + 1..b.size()).all(|y| {
            source_rel.iter().enumerate().all(|(i, &j)| {
                let before = b.same_class(j, x, y);
                let after = a.same_class(i, f[x], f[y]);
                if biconditional {
                    before == after
                } else {
                    !before || after
                }
            })
        })
    })
}

/// `f: B -> A` is one-to-one and `[x]_i = [y]_i ⟺ [f(x)]_i = [f(y)]_i`.
pub fn verify_embedding(b: &Space, a: &Space, f: &[usize]) -> Result<bool> {
    if b.n() != a.n() {
        return Err(Error::ArityMismatch {
            expected: a.n(),
            found: b.n(),
        });
    }
    check_map(b, a, f)?;
    let identity: Vec<usize> = (0..a.n()).collect();
    Ok(is_injective(f, a.size()) && preserves(b, a, f, &identity, true))
}

/// `f` is one-to-one and `[x]_{π(i)} = [y]_{π(i)} ⟺ [f(x)]_i = [f(y)]_i`.
pub fn verify_weak_embedding(b: &Space, a: &Space, f: &[usize], perm: &[usize]) -> Result<bool> {
    if b.n() != a.n() {
        return Err(Error::ArityMismatch {
            expected: a.n(),
            found: b.n(),
        });
    }
    check_permutation(perm, a.n())?;
    check_map(b, a, f)?;
    Ok(is_injective(f, a.size()) && preserves(b, a, f, perm, true))
}

/// `f` is one-to-one and `[x]_{β(i)} = [y]_{β(i)} ⟹ [f(x)]_i = [f(y)]_i` for
/// every relation `i` of `A`; `β` maps `A`'s relation indices to `B`'s.
pub fn verify_parbedding(b: &Space, a: &Space, f: &[usize], beta: &[usize]) -> Result<bool> {
    if beta.len() != a.n() {
        return Err(Error::ArityMismatch {
            expected: a.n(),
            found: beta.len(),
        });
    }
    if let Some(&bad) = beta.iter().find(|&&j| j >= b.n()) {
        return Err(Error::IndexOutOfRange {
            what: "beta value",
            index: bad,
            limit: b.n(),
        });
    }
    check_map(b, a, f)?;
    Ok(is_injective(f, a.size()) && preserves(b, a, f, beta, false))
}

/// Composes an `α`-parbedding `f: A_0 -> A_1` with a `β`-parbedding
/// `g: A_1 -> A_2` into the `(α∘β)`-indexed parbedding `g∘f: A_0 -> A_2`.
pub fn compose_parbeddings(
    f: &[usize],
    alpha: &[usize],
    g: &[usize],
    beta: &[usize],
) -> (Vec<usize>, Vec<usize>) {
    let map = f.iter().map(|&y| g[y]).collect();
    let index = beta.iter().map(|&j| alpha[j]).collect();
    (map, index)
}
