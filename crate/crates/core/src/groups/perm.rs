//! Permutations in 1-indexed cycle notation and closure of permutation
//! generators into a Cayley-table group.
//!
//! Products are composed left to right: (a·b)(i) = b(a(i)).

use std::collections::HashMap;

use super::FiniteGroup;
use crate::error::{Error, Result};

/// A permutation of {0..degree-1} stored as its image array.
pub type Perm = Vec<u16>;

pub fn identity_perm(degree: usize) -> Perm {
    (0..degree as u16).collect()
}

/// Apply `a` first, then `b`.
pub fn compose(a: &Perm, b: &Perm) -> Perm {
    a.iter().map(|&x| b[x as usize]).collect()
}

/// Parse 1-indexed cycle notation such as "(1,2)(3,4,5)" or "()".
/// Points may be separated by commas or whitespace; fixed points are omitted.
pub fn parse_cycles(s: &str, degree: usize) -> Result<Perm> {
    let mut p = identity_perm(degree);
    let mut seen = vec![false; degree];
    let mut rest = s.trim();
    while !rest.is_empty() {
        if !rest.starts_with('(') {
            return Err(Error::parse(format!("expected '(' in permutation '{s}'")));
        }
        let close = rest
            .find(')')
            .ok_or_else(|| Error::parse(format!("unclosed cycle in '{s}'")))?;
        let body = &rest[1..close];
        let pts: Vec<usize> = body
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::parse(format!("bad point '{t}' in '{s}'")))
            })
            .collect::<Result<_>>()?;
        for &x in &pts {
            if x == 0 || x > degree {
                return Err(Error::parse(format!(
                    "point {x} outside 1..{degree} in '{s}'"
                )));
            }
            if seen[x - 1] {
                return Err(Error::parse(format!("point {x} repeated in '{s}'")));
            }
            seen[x - 1] = true;
        }
        for (i, &x) in pts.iter().enumerate() {
            let y = pts[(i + 1) % pts.len()];
            p[x - 1] = (y - 1) as u16;
        }
        rest = rest[close + 1..].trim_start();
    }
    Ok(p)
}

/// 1-indexed cycle notation, "()" for the identity.
pub fn to_cycles(p: &Perm) -> String {
    let mut out = String::new();
    let mut seen = vec![false; p.len()];
    for start in 0..p.len() {
        if seen[start] || p[start] as usize == start {
            continue;
        }
        let mut cyc = vec![start + 1];
        seen[start] = true;
        let mut x = p[start] as usize;
        while x != start {
            seen[x] = true;
            cyc.push(x + 1);
            x = p[x] as usize;
        }
        out.push('(');
        out.push_str(
            &cyc.iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(","),
        );
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

fn is_bijection(p: &Perm) -> bool {
    let mut seen = vec![false; p.len()];
    p.iter().all(|&x| {
        let x = x as usize;
        x < seen.len() && !std::mem::replace(&mut seen[x], true)
    })
}

/// Close a set of permutations under composition. Elements are ordered by
/// breadth-first layers from the identity, each layer sorted
/// lexicographically by image array; element 0 is the identity.
pub fn from_permutation_generators(
    name: &str,
    degree: usize,
    gens: &[Perm],
    max_order: usize,
) -> Result<FiniteGroup> {
    for g in gens {
        if g.len() != degree || !is_bijection(g) {
            return Err(Error::parse(format!(
                "generator {} is not a permutation of degree {degree}",
                to_cycles(g)
            )));
        }
    }
    let id = identity_perm(degree);
    let mut elems: Vec<Perm> = vec![id.clone()];
    let mut index: HashMap<Perm, u32> = HashMap::new();
    index.insert(id, 0);
    let mut layer = vec![0usize];
    while !layer.is_empty() {
        let mut next: Vec<Perm> = Vec::new();
        for &x in &layer {
            for s in gens {
                let y = compose(&elems[x], s);
                if !index.contains_key(&y) && !next.contains(&y) {
                    next.push(y);
                }
            }
        }
        next.sort();
        next.dedup();
        layer.clear();
        for y in next {
            if elems.len() >= max_order {
                return Err(Error::size(format!(
                    "permutation closure exceeds the maximum order {max_order}"
                )));
            }
            index.insert(y.clone(), elems.len() as u32);
            layer.push(elems.len());
            elems.push(y);
        }
    }
    let n = elems.len();
    let mut table = vec![0u32; n * n];
    for a in 0..n {
        for b in 0..n {
            table[a * n + b] = index[&compose(&elems[a], &elems[b])];
        }
    }
    let mut gen_idx: Vec<usize> = gens
        .iter()
        .map(|s| index[s] as usize)
        .filter(|&i| i != 0)
        .collect();
    gen_idx.dedup();
    let labels = Some(elems.iter().map(to_cycles).collect());
    Ok(FiniteGroup::from_parts(
        name.to_string(),
        n,
        table,
        gen_idx,
        labels,
    ))
}

/// Parse and close cycle-notation generators.
pub fn from_cycle_strings(
    name: &str,
    degree: usize,
    gens: &[&str],
    max_order: usize,
) -> Result<FiniteGroup> {
    let perms = gens
        .iter()
        .map(|s| parse_cycles(s, degree))
        .collect::<Result<Vec<_>>>()?;
    from_permutation_generators(name, degree, &perms, max_order)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print_cycles() {
        let p = parse_cycles("(1,2)(3,4,5)", 5).unwrap();
        assert_eq!(p, vec![1, 0, 3, 4, 2]);
        assert_eq!(to_cycles(&p), "(1,2)(3,4,5)");
        assert_eq!(parse_cycles("()", 3).unwrap(), identity_perm(3));
        assert_eq!(parse_cycles("(1 3)", 3).unwrap(), vec![2, 1, 0]);
        assert!(parse_cycles("(1,4)", 3).is_err());
        assert!(parse_cycles("(1,2,1)", 3).is_err());
        assert!(parse_cycles("1,2", 3).is_err());
    }

    #[test]
    fn closures_have_expected_orders() {
        let s3 = from_cycle_strings("S3", 3, &["(1,2)", "(1,2,3)"], 512).unwrap();
        assert_eq!(s3.order(), 6);
        assert!(s3.verify_axioms());
        let t = from_permutation_generators("1", 1, &[], 512).unwrap();
        assert_eq!(t.order(), 1);
        let q8 = from_cycle_strings(
            "Q8",
            8,
            &["(1,2,4,7)(3,6,8,5)", "(1,3,4,8)(2,5,7,6)"],
            512,
        )
        .unwrap();
        assert_eq!(q8.order(), 8);
        assert_eq!(q8.center().order(), 2);
        assert!(from_cycle_strings("S5", 5, &["(1,2)", "(1,2,3,4,5)"], 100).is_err());
    }

    #[test]
    fn element_order_is_deterministic() {
        let a = from_cycle_strings("S3", 3, &["(1,2)", "(1,2,3)"], 512).unwrap();
        let b = from_cycle_strings("S3", 3, &["(1,2)", "(1,2,3)"], 512).unwrap();
        assert_eq!(a.table(), b.table());
        assert_eq!(a.label(0), "()");
        // first layer: the generators, sorted lexicographically
        assert_eq!(a.label(1), "(1,2)");
        assert_eq!(a.label(2), "(1,2,3)");
    }
}
