use std::time::Instant;

use coxpoly::algebra::{IntLaurent, Ring, ZPoly};
use coxpoly::braid::{self, BraidWord, BurauKind};
use coxpoly::cfrac::{expand_cycle, expand_tree, ZFrac};
use coxpoly::coxeter::{
    char_poly, cofactors, coxeter_poly, expansion_at_infinity, identity7_check, path_sum_h, schur_step, walk_gf,
};
use coxpoly::diagram::{Bipartition, Diagram, Family};
use coxpoly::identities::{binet_cauchy, cd_char, cd_coxeter, cd_wronskian, chain_identities, poincare_cd, PoincareCd};
use coxpoly::kostant::{
    a2m_closed_form, cramer_table, ebeling_ratios, perfect_square_check, prop2_squares, verify_system,
    walk_series_check, KleinGroupData, System,
};
use coxpoly::report::IdentityReport;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::args::{KostantCheck, Suite, VerifyArgs};
use crate::output::{record, Output, Record};
use crate::{load_diagram, usage, CliResult, Ctx};

const WALK_LEN: usize = 12;
const BINET_MAX_RANK: usize = 6;

struct Target {
    name: String,
    diagram: Diagram,
    klein: Option<KleinGroupData>,
}

impl Target {
    fn new(name: String, diagram: Diagram) -> Self {
        let klein = KleinGroupData::from_name(&name).ok();
        Target { name, diagram, klein }
    }
}

fn targets(a: &VerifyArgs) -> CliResult<Vec<Target>> {
    if !a.diagram.is_empty() {
        return a
            .diagram
            .iter()
            .map(|s| Ok(Target::new(s.clone(), load_diagram(s)?)))
            .collect();
    }
    let mut out = Vec::new();
    for f in [Family::A, Family::D, Family::E, Family::AffA, Family::AffD, Family::AffE] {
        for n in 1..=a.max_rank {
            if f.valid_rank(n) {
                out.push(Target::new(f.name(n), Diagram::build(f, n)?));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
    for k in 0..a.random_trees {
        let n = rng.gen_range(1..=a.max_vertices.max(1));
        let d = Diagram::random_tree(&mut rng, n, &[1, 2]);
        out.push(Target {
            name: format!("tree{k}"),
            diagram: d,
            klein: None,
        });
    }
    Ok(out)
}

const DIAGRAM_SUITES: [Suite; 13] = [
    Suite::Coincidence,
    Suite::Symmetry,
    Suite::Schur,
    Suite::Paths,
    Suite::Walks,
    Suite::Identity7,
    Suite::CdCoxeter,
    Suite::CdWronskian,
    Suite::CdChar,
    Suite::Chain,
    Suite::BinetCauchy,
    Suite::Cfrac,
    Suite::PoincareCd,
];

fn suite_name(s: Suite) -> &'static str {
    match s {
        Suite::All => "all",
        Suite::Coincidence => "coincidence",
        Suite::Symmetry => "symmetry",
        Suite::Schur => "schur",
        Suite::Paths => "paths",
        Suite::Walks => "walks",
        Suite::Identity7 => "identity7",
        Suite::CdCoxeter => "cd-coxeter",
        Suite::CdWronskian => "cd-wronskian",
        Suite::CdChar => "cd-char",
        Suite::Chain => "chain",
        Suite::BinetCauchy => "binet-cauchy",
        Suite::Cfrac => "cfrac",
        Suite::PoincareCd => "poincare-cd",
        Suite::Kostant => "kostant",
        Suite::Burau => "burau",
        Suite::Levin => "levin",
    }
}

struct Collector<'a> {
    out: Output,
    ctx: &'a Ctx,
}

impl Collector<'_> {
    fn batch(
        &mut self,
        suite: Suite,
        target: &str,
        f: impl FnOnce() -> CliResult<Vec<IdentityReport>>,
    ) -> CliResult<()> {
        let start = Instant::now();
        let reports = f()?;
        let ms = self.ctx.timings.then(|| start.elapsed().as_millis() as u64);
        for r in &reports {
            self.out.record(record(suite_name(suite), target, r, ms));
        }
        Ok(())
    }

    fn flag(&mut self, suite: Suite, case: String, holds: bool) {
        self.out.record(Record {
            suite: suite_name(suite).into(),
            case,
            holds,
            residual_terms: usize::from(!holds),
            elapsed_ms: None,
        });
    }
}

pub(crate) fn run(a: &VerifyArgs, ctx: &Ctx) -> CliResult<Output> {
    let suites: Vec<Suite> = match a.identity {
        Suite::All => DIAGRAM_SUITES
            .iter()
            .copied()
            .chain([Suite::Kostant, Suite::Burau, Suite::Levin])
            .collect(),
        s => vec![s],
    };
    let targets = if suites.iter().any(|s| DIAGRAM_SUITES.contains(s) || *s == Suite::Kostant) {
        targets(a)?
    } else {
        Vec::new()
    };
    let mut c = Collector {
        out: Output::default(),
        ctx,
    };
    for &suite in &suites {
        match suite {
            Suite::Burau => burau_suite(&mut c, a.seed)?,
            Suite::Levin => levin_suite(&mut c)?,
            _ => {
                for (idx, t) in targets.iter().enumerate() {
                    diagram_suite(&mut c, suite, t, a.seed ^ (idx as u64).wrapping_mul(0x9e37_79b9))?;
                }
            }
        }
    }
    Ok(c.out)
}

/// Longest unit-weight tail starting at leaf `v` whose inner vertices have
/// no other neighbours; at least one vertex is left over.
fn tail_from(d: &Diagram, v: usize) -> Vec<usize> {
    let mut tail = vec![v];
    loop {
        let last = *tail.last().unwrap();
        let next: Vec<usize> = d.neighbors(last).into_iter().filter(|u| !tail.contains(u)).collect();
        if next.len() != 1 || d.weight(last, next[0]) != 1 || tail.len() + 1 >= d.len() {
            return tail;
        }
        tail.push(next[0]);
    }
}

fn diagram_suite(c: &mut Collector, suite: Suite, t: &Target, seed: u64) -> CliResult<()> {
    let d = &t.diagram;
    let n = d.len();
    let name = t.name.as_str();
    match suite {
        Suite::Coincidence => match d.bipartite_order() {
            Bipartition::Order(order) => c.batch(suite, name, || {
                let d = d.clone().with_order(order)?;
                Ok(vec![IdentityReport::compare(
                    "bipartite Coxeter = char",
                    coxeter_poly(&d),
                    char_poly(&d).z_substitute(),
                )])
            })?,
            Bipartition::NotBipartite { cycle } => {
                c.flag(suite, format!("{name}: odd cycle of length {} rejected", cycle.len()), cycle.len() % 2 == 1)
            }
        },
        Suite::Symmetry => c.batch(suite, name, || {
            let p = coxeter_poly(d);
            Ok(vec![IdentityReport::compare("q-symmetry", p.invert_var(), p)])
        })?,
        Suite::Schur => c.batch(suite, name, || {
            let g = coxeter_poly(d);
            (0..n)
                .map(|p| {
                    Ok(IdentityReport::compare(
                        format!("reassembly at {p}"),
                        schur_step(d, p)?.reassemble(),
                        g.clone(),
                    ))
                })
                .collect()
        })?,
        Suite::Paths => c.batch(suite, name, || {
            let tab = cofactors(d);
            let mut out = Vec::new();
            for i in 0..n {
                for j in i..n {
                    out.push(IdentityReport::compare(
                        format!("path sum {i},{j}"),
                        path_sum_h(d, i, j)?,
                        tab.h(i, j).clone(),
                    ));
                }
            }
            Ok(out)
        })?,
        Suite::Walks => c.batch(suite, name, || {
            let tab = cofactors(d);
            let mut out = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    let e = expansion_at_infinity(tab.h(i, j), tab.det(), WALK_LEN).unwrap_or_default();
                    out.push(IdentityReport::compare(
                        format!("walks {i},{j}"),
                        ZPoly::from_coeffs(e),
                        ZPoly::from_coeffs(walk_gf(d, i, j, WALK_LEN)?),
                    ));
                }
            }
            Ok(out)
        })?,
        Suite::Identity7 => c.batch(suite, name, || {
            let mut out = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        out.push(IdentityReport::compare(
                            format!("cofactor square {i},{j}"),
                            identity7_check(d, i, j)?,
                            ZPoly::zero(),
                        ));
                    }
                }
            }
            Ok(out)
        })?,
        Suite::CdCoxeter => c.batch(suite, name, || (0..n).map(|p| Ok(cd_coxeter(d, p)?)).collect())?,
        Suite::CdWronskian => c.batch(suite, name, || (0..n).map(|p| Ok(cd_wronskian(d, p)?)).collect())?,
        Suite::CdChar => c.batch(suite, name, || {
            let mut out = Vec::new();
            for i in 0..n {
                for j in i..n {
                    out.extend(cd_char(d, i, j)?);
                }
            }
            Ok(out)
        })?,
        Suite::Chain => {
            for v in (0..n).filter(|&v| d.degree(v) == 1) {
                let tail = tail_from(d, v);
                c.batch(suite, &format!("{name} tail {tail:?}"), || Ok(chain_identities(d, &tail)?))?;
            }
        }
        Suite::BinetCauchy if n <= BINET_MAX_RANK => c.batch(suite, name, || {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut out = Vec::new();
            for m in 1..=n.min(3) {
                for i in 0..n {
                    for j in i..n {
                        let xs: Vec<i64> = (0..m).map(|_| rng.gen_range(-6..=6)).collect();
                        let ys: Vec<i64> = (0..m).map(|_| rng.gen_range(-6..=6)).collect();
                        out.extend(binet_cauchy(d, i, j, &xs, &ys)?);
                    }
                }
            }
            Ok(out)
        })?,
        Suite::BinetCauchy => {}
        Suite::Cfrac => cfrac_suite(c, t)?,
        Suite::PoincareCd => {
            if let Some(k) = &t.klein {
                c.batch(suite, name, || {
                    let mut out = poincare_cd(k, PoincareCd::Root)?;
                    if k.family == Family::AffA {
                        for i in 1..=k.n {
                            for j in i..=k.n {
                                out.extend(poincare_cd(k, PoincareCd::Arc(i, j))?);
                            }
                        }
                    } else {
                        for i in 0..=k.n {
                            out.extend(poincare_cd(k, PoincareCd::Subtree(i))?);
                        }
                    }
                    Ok(out)
                })?;
            }
        }
        Suite::Kostant => {
            if let Some(k) = &t.klein {
                c.batch(suite, name, || kostant_reports(k, KostantCheck::All, 20, false))?;
            }
        }
        Suite::All | Suite::Burau | Suite::Levin => unreachable!("not a per-diagram suite"),
    }
    Ok(())
}

fn cfrac_suite(c: &mut Collector, t: &Target) -> CliResult<()> {
    let d = &t.diagram;
    let suite = Suite::Cfrac;
    if let Some(k) = t.klein.as_ref().filter(|k| k.family == Family::AffA) {
        let n = k.n;
        let frac = expand_cycle(n, n)?;
        let count = if n % 2 == 1 { n } else { n + 1 };
        c.flag(suite, format!("{}: z count {}", t.name, frac.z_count()), frac.z_count() == count);
        return c.batch(suite, &t.name, || {
            let want = ZFrac::new(char_poly(&Diagram::build(Family::A, n)?), char_poly(d))?;
            Ok(vec![IdentityReport::compare("cycle fraction value", frac.evaluate()?, want)])
        });
    }
    if !d.is_tree() {
        return Ok(());
    }
    for root in 0..d.len() {
        let frac = expand_tree(d, root)?;
        c.flag(
            suite,
            format!("{}: z count from {root}", t.name),
            frac.z_count() == d.len(),
        );
        c.batch(suite, &t.name, || {
            let want = ZFrac::new(char_poly(&d.delete(&[root])?), char_poly(d))?;
            Ok(vec![IdentityReport::compare(
                format!("tree fraction value from {root}"),
                frac.evaluate()?,
                want,
            )])
        })?;
    }
    Ok(())
}

/// Reports for one Klein group check. `All` leaves out the informational
/// bare-sum recurrence.
pub(crate) fn kostant_reports(
    k: &KleinGroupData,
    check: KostantCheck,
    walk_len: usize,
    strict: bool,
) -> CliResult<Vec<IdentityReport>> {
    let odd_cycle = (k.family == Family::AffA && k.n.is_multiple_of(2)).then_some(k.n / 2);
    let mut out = Vec::new();
    let all = check == KostantCheck::All;
    if all || check == KostantCheck::Series {
        out.extend(verify_system(k, System::Series)?);
    }
    if all || check == KostantCheck::Numerators {
        out.extend(verify_system(k, System::Numerators)?);
    }
    if all || check == KostantCheck::Cofactors {
        out.extend(verify_system(k, System::Cofactors)?);
    }
    if all || check == KostantCheck::Ratios {
        out.extend(ebeling_ratios(k));
    }
    if all || check == KostantCheck::Cramer {
        for (i, z) in cramer_table(k)?.into_iter().enumerate() {
            out.push(IdentityReport::compare(format!("Cramer Z{i}"), z, k.z[i].clone()));
        }
    }
    if all || check == KostantCheck::Squares {
        for i in 1..=k.n {
            out.push(prop2_squares(k, i)?);
        }
    }
    if all || check == KostantCheck::Walks {
        for i in 0..=k.n {
            out.push(walk_series_check(k, i, walk_len)?);
        }
    }
    if all || check == KostantCheck::Exponents {
        let c = |x: i64| IntLaurent::constant(x as i128);
        let (a, b, h) = (k.a as i64, k.b as i64, k.h as i64);
        out.push(IdentityReport::compare("a + b = h + 2", c(a + b), c(h + 2)));
        out.push(IdentityReport::compare("a b = 2|B|", c(a * b), c(2 * k.order)));
        let s = perfect_square_check(k)? as i64;
        out.push(IdentityReport::compare(
            format!("(h+2)^2 - 8|B| = {s}^2"),
            c(s * s),
            c((h + 2) * (h + 2) - 8 * k.order),
        ));
    }
    if all || check == KostantCheck::Closed || check == KostantCheck::Literal {
        match odd_cycle {
            Some(m) => {
                let mut r = a2m_closed_form(m)?;
                let literal = r.pop();
                if check == KostantCheck::Literal {
                    out.extend(literal);
                } else {
                    out.extend(r);
                }
            }
            None if strict && !all => return usage(format!("{} is not an odd cycle", k.name())),
            None => {}
        }
    }
    Ok(out)
}

fn burau_suite(c: &mut Collector, seed: u64) -> CliResult<()> {
    let suite = Suite::Burau;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut random = |n: usize| -> CliResult<BraidWord> {
        let len = rng.gen_range(0..=8);
        let w = (0..len)
            .map(|_| {
                let g = rng.gen_range(1..n as i32);
                if rng.gen_bool(0.5) {
                    g
                } else {
                    -g
                }
            })
            .collect();
        Ok(BraidWord::new(n, w)?)
    };
    for case in 0..20 {
        let n = 2 + case % 3;
        let (x, y) = (random(n)?, random(n)?);
        let xy = x.concat(&y)?;
        for kind in [BurauKind::Unreduced, BurauKind::Reduced] {
            let holds = braid::burau(&xy, kind) == braid::burau(&x, kind).mul(&braid::burau(&y, kind));
            c.flag(suite, format!("multiplicative {kind:?} [{x}] [{y}]"), holds);
        }
    }
    let s1 = BraidWord::parse(2, "s1")?;
    for k in 1..=5 {
        let b = BraidWord::new(2, vec![1; k])?;
        c.batch(suite, "T(2,k)", || Ok(vec![braid::conway_ratio_check(&s1, &b)?]))?;
    }
    let s3 = BraidWord::parse(2, "s1 s1 s1")?;
    let b = BraidWord::parse(2, "-s1 -s1")?;
    c.batch(suite, "trefoil to unknot", || Ok(vec![braid::conway_ratio_check(&s3, &b)?]))
}

fn levin_suite(c: &mut Collector) -> CliResult<()> {
    let hopf = BraidWord::parse(2, "s1 s1")?;
    c.batch(Suite::Levin, "hopf", || Ok(vec![braid::levin_check(&hopf, 16)?]))?;
    for k in [-3i32, -2, 2, 3] {
        let g = k.signum();
        let b = BraidWord::new(2, vec![g; 2 * k.unsigned_abs() as usize])?;
        c.batch(Suite::Levin, &format!("T(2,{})", 2 * k), || Ok(vec![braid::levin_check(&b, 12)?]))?;
    }
    Ok(())
}
