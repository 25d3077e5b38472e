//! The computations behind each subcommand, producing JSON reports.

use doubleaut::autdouble::{
    build_aut, classify, kernel_n, multiply, predicates, verify_element, AutDG, BuildOptions,
    Classification,
};
use doubleaut::double::MorphQuadruple;
use doubleaut::error::Result;
use doubleaut::groups::{abelian_direct_factor, is_perfect, is_stem, FiniteGroup};
use doubleaut::modaction::{all_labels, orbit_report, orbits, pullback_character_oracle};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum VerifyLevel {
    None,
    Spot,
    Full,
}

impl VerifyLevel {
    pub fn as_str(self) -> &'static str {
        match self {
            VerifyLevel::None => "none",
            VerifyLevel::Spot => "spot",
            VerifyLevel::Full => "full",
        }
    }

    /// Random elements sampled per property.
    fn samples(self) -> usize {
        match self {
            VerifyLevel::None => 0,
            VerifyLevel::Spot => 20,
            VerifyLevel::Full => 200,
        }
    }
}

fn group_json(g: &FiniteGroup) -> Value {
    json!({"name": g.name(), "order": g.order()})
}

pub fn classify_report(g: &FiniteGroup) -> Value {
    let dec = abelian_direct_factor(g);
    json!({
        "group": group_json(g),
        "classification": classify(g).as_str(),
        "center_order": g.center().order(),
        "derived_order": g.derived_subgroup().order(),
        "abelianization": g.abelianization().factors(),
        "abelian_direct_factor": dec.map(|d| json!({
            "abelian_order": d.abelian.order(),
            "complement_order": d.other.order(),
        })),
        "stem": is_stem(g),
        "perfect": is_perfect(g),
        "centerless": g.center().order() == 1,
    })
}

/// One named check of the verification suite.
#[derive(Clone, Debug)]
pub struct Check {
    pub name: &'static str,
    pub passed: usize,
    pub failed: usize,
    pub first_failure: Option<String>,
    pub applicable: bool,
}

impl Check {
    fn new(name: &'static str) -> Self {
        Check {
            name,
            passed: 0,
            failed: 0,
            first_failure: None,
            applicable: true,
        }
    }

    fn skipped(name: &'static str) -> Self {
        Check {
            applicable: false,
            ..Check::new(name)
        }
    }

    fn record(&mut self, outcome: std::result::Result<(), String>) {
        match outcome {
            Ok(()) => self.passed += 1,
            Err(e) => {
                self.failed += 1;
                self.first_failure.get_or_insert(e);
            }
        }
    }

    fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "applicable": self.applicable,
            "passed": self.passed,
            "failed": self.failed,
            "first_failure": self.first_failure,
        })
    }
}

pub struct Suite {
    pub level: VerifyLevel,
    pub checks: Vec<Check>,
}

impl Suite {
    pub fn failed(&self) -> usize {
        self.checks.iter().map(|c| c.failed).sum()
    }

    pub fn first_failure(&self) -> Option<(&'static str, &str)> {
        self.checks
            .iter()
            .find_map(|c| c.first_failure.as_deref().map(|f| (c.name, f)))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "level": self.level.as_str(),
            "passed": self.checks.iter().map(|c| c.passed).sum::<usize>(),
            "failed": self.failed(),
            "checks": self.checks.iter().map(Check::to_json).collect::<Vec<_>>(),
        })
    }
}

fn err_string<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

/// The invariant suite: Hopf oracle on generators and sampled products,
/// flip involution and anti-homomorphism, factorization round-trips,
/// closure against the order, the kernel cross-check and, at `full`, the
/// module-action character oracle.
pub fn run_suite(a: &AutDG, level: VerifyLevel, seed: u64) -> Result<Suite> {
    let g = a.group();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let samples = level.samples();
    let mut checks = Vec::new();

    let mut gens = Check::new("generators");
    for q in a.generators() {
        gens.record(verify_element(g, q));
    }
    checks.push(gens);

    let mut products = Check::new("random_products");
    let mut sampled = Vec::with_capacity(samples);
    for _ in 0..samples {
        let q1 = a.random_element(&mut rng)?;
        let q2 = a.random_element(&mut rng)?;
        let q = multiply(g, &q1, &q2)?;
        products.record(verify_element(g, &q));
        sampled.push((q1, q2));
    }
    checks.push(products);

    let mut flip = Check::new("flip_anti_isomorphism");
    for (q1, q2) in &sampled {
        flip.record((|| {
            let f1 = err_string(q1.flip(g))?;
            if err_string(f1.flip(g))? != *q1 {
                return Err("flip is not an involution".to_string());
            }
            let lhs = err_string(multiply(g, q1, q2).and_then(|q| q.flip(g)))?;
            let rhs = err_string(q2.flip(g).and_then(|f2| multiply(g, &f2, &f1)))?;
            if lhs != rhs {
                return Err("flip(q1∘q2) ≠ flip(q2)∘flip(q1)".to_string());
            }
            Ok(())
        })());
    }
    checks.push(flip);

    if a.classification() == Classification::PurelyNonabelian {
        let mut fact = Check::new("factorization_round_trip");
        for (q, _) in &sampled {
            fact.record((|| {
                let f = err_string(a.factorize(q))?;
                if err_string(f.recompose(g))? != *q {
                    return Err("recomposed element differs".to_string());
                }
                Ok(())
            })());
        }
        checks.push(fact);
    } else {
        checks.push(Check::skipped("factorization_round_trip"));
    }

    match a.closure_order() {
        Some(c) if a.is_exact() => {
            let mut cl = Check::new("closure_order");
            cl.record(if c == a.order() {
                Ok(())
            } else {
                Err(format!("closure has {c} elements, order formula gives {}", a.order()))
            });
            checks.push(cl);
        }
        _ => checks.push(Check::skipped("closure_order")),
    }

    let mut kern = Check::new("restriction_kernel");
    let k = kernel_n(a)?;
    kern.record(if k.agrees() {
        Ok(())
    } else {
        Err(format!(
            "filter gives {}, structure gives {}",
            k.order_filter, k.order_structural
        ))
    });
    checks.push(kern);

    let mut preds = Check::new("predicates");
    let p = predicates(a, &k)?;
    preds.record(if p.all_agree() {
        Ok(())
    } else {
        Err("a predicate's direct check disagrees with its structural form".to_string())
    });
    checks.push(preds);

    if level == VerifyLevel::Full {
        let space = all_labels(g)?;
        let mut modc = Check::new("module_characters");
        for q in a.generators() {
            for l in space.labels() {
                modc.record(err_string(pullback_character_oracle(&space, q, l)));
            }
        }
        checks.push(modc);
    } else {
        checks.push(Check::skipped("module_characters"));
    }

    Ok(Suite { level, checks })
}

pub fn build(g: &FiniteGroup, opts: &BuildOptions) -> Result<AutDG> {
    build_aut(g, opts)
}

pub fn analyze_report(a: &AutDG, level: VerifyLevel, seed: u64) -> Result<Value> {
    let k = kernel_n(a)?;
    let p = predicates(a, &k)?;
    let mut report = a.report(Some(&k), Some(&p));
    let space = all_labels(a.group())?;
    let o = orbits(&space, a)?;
    let r = o.reduction_factor(space.len());
    report["orbit_summary"] = json!({
        "labels": space.len(),
        "orbits": o.orbits.len(),
        "reduction_factor": format!("{}/{}", r.numer(), r.denom()),
    });
    report["verification"] = if level == VerifyLevel::None {
        json!({"level": "none"})
    } else {
        run_suite(a, level, seed)?.to_json()
    };
    Ok(report)
}

pub fn orbits_report(a: &AutDG) -> Result<Value> {
    let space = all_labels(a.group())?;
    let o = orbits(&space, a)?;
    Ok(orbit_report(&space, &o))
}

/// Check an injected quadruple: compatibility relations first (naming the
/// first failing one), then the Hopf oracle, bijectivity and membership.
pub fn check_injected(a: &AutDG, q: &MorphQuadruple) -> Check {
    let g = a.group();
    let mut c = Check::new("injected");
    c.record((|| {
        if let Some((rel, w)) = q.check_compatibility(g).failure {
            return Err(format!("relation \"{rel}\" fails at {w}"));
        }
        verify_element(g, q)?;
        if !err_string(a.contains(q))? {
            return Err("not an element of the computed group".to_string());
        }
        Ok(())
    })());
    c
}
