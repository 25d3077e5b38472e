//! Standard constructions and the test corpus of small groups.

use super::perm::from_permutation_generators;
use super::{FiniteGroup, GroupHom};

/// Z/n with element i = i·1.
pub fn cyclic(n: usize) -> FiniteGroup {
    assert!(n >= 1);
    let table = (0..n * n).map(|k| ((k / n + k % n) % n) as u32).collect();
    let gens = if n > 1 { vec![1] } else { vec![] };
    FiniteGroup::from_parts(format!("Z{n}"), n, table, gens, None)
}

/// G × H with (g, h) stored at index g·|H| + h.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> FiniteGroup {
    let (a, b) = (g.order(), h.order());
    let n = a * b;
    let mut table = vec![0u32; n * n];
    for x in 0..n {
        for y in 0..n {
            let (g1, h1) = (x / b, x % b);
            let (g2, h2) = (y / b, y % b);
            table[x * n + y] = (g.mul(g1, g2) * b + h.mul(h1, h2)) as u32;
        }
    }
    let mut gens: Vec<usize> = g.generators().iter().map(|&s| s * b).collect();
    gens.extend(h.generators().iter().copied());
    FiniteGroup::from_parts(format!("{}x{}", g.name(), h.name()), n, table, gens, None)
}

/// Metacyclic group ⟨a, b | aⁿ = 1, bᵐ = aˢ, b a b⁻¹ = aʳ⟩ with element
/// aⁱbʲ at index j·n + i. Requires rᵐ ≡ 1 and r·s ≡ s (mod n).
pub fn metacyclic(name: &str, n: usize, m: usize, r: usize, s: usize) -> FiniteGroup {
    let rpow: Vec<usize> = (0..=m)
        .scan(1usize, |acc, _| {
            let v = *acc;
            *acc = *acc * r % n;
            Some(v)
        })
        .collect();
    assert_eq!(rpow[m] % n, 1 % n, "r^m must be 1 mod n");
    assert_eq!(r * s % n, s % n, "a^s must commute with b");
    let size = n * m;
    let mut table = vec![0u32; size * size];
    for x in 0..size {
        for y in 0..size {
            let (i, j) = (x % n, x / n);
            let (k, l) = (y % n, y / n);
            let mut e = i + k * rpow[j];
            let mut f = j + l;
            if f >= m {
                f -= m;
                e += s;
            }
            table[x * size + y] = (f * n + e % n) as u32;
        }
    }
    let mut gens = vec![];
    if n > 1 {
        gens.push(1);
    }
    if m > 1 {
        gens.push(n);
    }
    FiniteGroup::from_parts(name.to_string(), size, table, gens, None)
}

/// N ⋊ Z/m where the generator t of Z/m acts by t x t⁻¹ = φ(x).
/// Element (x, tʲ) is stored at index j·|N| + x.
pub fn semidirect_cyclic(name: &str, nn: &FiniteGroup, m: usize, phi: &GroupHom) -> FiniteGroup {
    let k = nn.order();
    let mut powers = vec![GroupHom::identity(k)];
    for j in 1..=m {
        powers.push(phi.after(&powers[j - 1]));
    }
    assert!(powers[m].is_identity(), "φ^m must be the identity");
    let size = k * m;
    let mut table = vec![0u32; size * size];
    for x in 0..size {
        for y in 0..size {
            let (a, i) = (x % k, x / k);
            let (b, j) = (y % k, y / k);
            let c = nn.mul(a, powers[i].apply(b));
            table[x * size + y] = (((i + j) % m) * k + c) as u32;
        }
    }
    let mut gens: Vec<usize> = nn.generators().to_vec();
    if m > 1 {
        gens.push(k);
    }
    FiniteGroup::from_parts(name.to_string(), size, table, gens, None)
}

/// Dihedral group of order n (n even, n ≥ 4; D4 ≅ Z2² included).
pub fn dihedral(order: usize) -> FiniteGroup {
    assert!(order % 2 == 0 && order >= 4);
    let k = order / 2;
    metacyclic(&format!("D{order}"), k, 2, k - 1, 0)
}

/// Generalized quaternion / dicyclic group of order n (n divisible by 4).
pub fn quaternion(order: usize) -> FiniteGroup {
    assert!(order % 4 == 0 && order >= 8);
    let k = order / 2;
    let name = if order.is_power_of_two() {
        format!("Q{order}")
    } else {
        format!("Dic{order}")
    };
    metacyclic(&name, k, 2, k - 1, k / 2)
}

fn perm_from_fn(degree: usize, f: impl Fn(usize) -> usize) -> Vec<u16> {
    (0..degree).map(|i| f(i) as u16).collect()
}

/// Symmetric group S_n on n points.
pub fn symmetric(n: usize) -> FiniteGroup {
    let gens = if n <= 1 {
        vec![]
    } else if n == 2 {
        vec![perm_from_fn(2, |i| 1 - i)]
    } else {
        vec![
            perm_from_fn(n, |i| match i {
                0 => 1,
                1 => 0,
                _ => i,
            }),
            perm_from_fn(n, |i| (i + 1) % n),
        ]
    };
    from_permutation_generators(&format!("S{n}"), n.max(1), &gens, usize::MAX)
        .expect("symmetric group closure")
}

/// Alternating group A_n on n ≥ 3 points, generated by 3-cycles (1,2,k).
pub fn alternating(n: usize) -> FiniteGroup {
    assert!(n >= 3);
    let gens: Vec<Vec<u16>> = (2..n)
        .map(|k| {
            perm_from_fn(n, |i| match i {
                0 => 1,
                1 => k,
                x if x == k => 0,
                x => x,
            })
        })
        .collect();
    from_permutation_generators(&format!("A{n}"), n, &gens, usize::MAX)
        .expect("alternating group closure")
}

fn hom_on(g: &FiniteGroup, gens: &[usize], images: &[usize]) -> GroupHom {
    super::extend_from_generators(g, gens, images, g).expect("valid automorphism data")
}

/// Z4 × Z2 = ⟨y⟩ × ⟨z⟩ with y at index 2 and z at index 1.
fn z4xz2() -> FiniteGroup {
    direct_product(&cyclic(4), &cyclic(2))
}

/// SmallGroup(16,3): (Z4 × Z2) ⋊ Z2 with a ↦ ab, b ↦ b.
pub fn smallgroup_16_3() -> FiniteGroup {
    let n = z4xz2();
    let (a, b) = (2, 1);
    let phi = hom_on(&n, &[a, b], &[n.mul(a, b), b]);
    semidirect_cyclic("(Z4xZ2):Z2", &n, 2, &phi)
}

/// SmallGroup(16,13), the Pauli group: (Z4 × Z2) ⋊ Z2 with a ↦ a, b ↦ a²b.
pub fn pauli() -> FiniteGroup {
    let n = z4xz2();
    let (a, b) = (2, 1);
    let a2 = n.mul(a, a);
    let phi = hom_on(&n, &[a, b], &[a, n.mul(a2, b)]);
    semidirect_cyclic("Pauli", &n, 2, &phi)
}

/// SmallGroup(32,2): (Z4 × Z2) ⋊ Z4 = ⟨y⟩×⟨z⟩ ⋊ ⟨x⟩ with x: y ↦ yz, z ↦ z.
pub fn smallgroup_32_2() -> FiniteGroup {
    let n = z4xz2();
    let (y, z) = (2, 1);
    let phi = hom_on(&n, &[y, z], &[n.mul(y, z), z]);
    semidirect_cyclic("SmallGroup(32,2)", &n, 4, &phi)
}

/// All 42 groups of order at most 16, one per isomorphism class, in order
/// of increasing order.
pub fn groups_up_to_16() -> Vec<FiniteGroup> {
    let c = cyclic;
    let dp = |a: &FiniteGroup, b: &FiniteGroup, name: &str| direct_product(a, b).with_name(name);
    let z2 = c(2);
    let z2sq = dp(&z2, &z2, "Z2^2");
    vec![
        c(1),
        c(2),
        c(3),
        c(4),
        z2sq.clone(),
        c(5),
        c(6),
        symmetric(3),
        c(7),
        c(8),
        dp(&c(4), &z2, "Z4xZ2"),
        dp(&z2sq, &z2, "Z2^3"),
        dihedral(8),
        quaternion(8),
        c(9),
        dp(&c(3), &c(3), "Z3^2"),
        c(10),
        dihedral(10),
        c(11),
        c(12),
        dp(&c(6), &z2, "Z6xZ2"),
        alternating(4),
        dihedral(12),
        quaternion(12),
        c(13),
        c(14),
        dihedral(14),
        c(15),
        c(16),
        dp(&c(4), &c(4), "Z4^2"),
        smallgroup_16_3(),
        metacyclic("Z4:Z4", 4, 4, 3, 0),
        dp(&c(8), &z2, "Z8xZ2"),
        metacyclic("M16", 8, 2, 5, 0),
        dihedral(16),
        metacyclic("QD16", 8, 2, 3, 0),
        quaternion(16),
        dp(&dp(&c(4), &z2, "Z4xZ2"), &z2, "Z4xZ2^2"),
        dp(&z2, &dihedral(8), "Z2xD8"),
        dp(&z2, &quaternion(8), "Z2xQ8"),
        pauli(),
        dp(&dp(&z2sq, &z2, "Z2^3"), &z2, "Z2^4"),
    ]
}

/// The full test corpus: all groups of order ≤ 16 plus SmallGroup(32,2).
pub fn corpus() -> Vec<FiniteGroup> {
    let mut v = groups_up_to_16();
    v.push(smallgroup_32_2());
    v
}

/// Look up a corpus group (or S_n / A_n / D_n / Q_n / Z_n) by name.
pub fn by_name(name: &str) -> Option<FiniteGroup> {
    if let Some(g) = corpus().into_iter().find(|g| g.name() == name) {
        return Some(g);
    }
    let num = |p: &str| name.strip_prefix(p).and_then(|r| r.parse::<usize>().ok());
    if let Some(n) = num("S").filter(|&n| (1..=6).contains(&n)) {
        return Some(symmetric(n));
    }
    if let Some(n) = num("A").filter(|&n| (3..=6).contains(&n)) {
        return Some(alternating(n));
    }
    if let Some(n) = num("D").filter(|&n| n >= 4 && n % 2 == 0 && n <= 512) {
        return Some(dihedral(n));
    }
    if let Some(n) = num("Z").filter(|&n| (1..=512).contains(&n)) {
        return Some(cyclic(n));
    }
    None
}
