use std::time::Instant;

use coxpoly::algebra::{bezoutian, det_exact, sqrt1p, wronskian, IntLaurent, Ring, ZPoly};
use coxpoly::braid::{self, BurauKind};
use coxpoly::cfrac::{expand_cycle, expand_tree, CFracNode, Format as CFracFormat};
use coxpoly::coxeter::{
    alexander_conway, char_poly, cofactors, coxeter_poly, divide_identity, identity7_check, join_poly, path_sum_h,
    schur_step, walk_gf,
};
use coxpoly::diagram::{Bipartition, Diagram, Family};
use coxpoly::kostant::{poincare_series, KleinGroupData};
use coxpoly::report::IdentityReport;
use serde_json::{json, Value};

use crate::args::{BraidCommand, CfracArgs, CoxeterArgs, DiagramArgs, DivideArgs, Format, KostantArgs, PolyCommand};
use crate::output::{record, to_latex, Computed, Output, Record};
use crate::{load_diagram, parse_braid, parse_int_matrix, parse_join, parse_laurent_matrix, usage, CliResult, Ctx};

fn check_vertex(d: &Diagram, v: usize) -> CliResult<()> {
    if v >= d.len() {
        return Err(coxpoly::Error::UnknownVertex(v).into());
    }
    Ok(())
}

pub fn coxeter(a: &CoxeterArgs) -> CliResult<Output> {
    let mut out = Output::default();
    let (name, mut d, parts) = match (&a.diagram, &a.join) {
        (Some(name), _) => (name.clone(), load_diagram(name)?, None),
        (None, Some(text)) => {
            let parts = parse_join(text)?;
            (text.clone(), Diagram::join(&parts)?, Some(parts))
        }
        (None, None) => return usage("--diagram or --join is required"),
    };
    if let Some(order) = &a.order {
        d = d.with_order(order.clone())?;
    }
    let order: Vec<usize> = d.order().to_vec();
    let (kind, poly) = if a.char_poly {
        ("char", char_poly(&d).to_string())
    } else if a.conway {
        ("conway", alexander_conway(&d).to_string())
    } else {
        let p = match &parts {
            Some(parts) if a.order.is_none() => join_poly(parts)?,
            _ => coxeter_poly(&d),
        };
        ("coxeter", p.to_string())
    };
    out.push(
        Computed::poly(kind, None, poly)
            .field("diagram", name.as_str())
            .field("order", order),
    );
    if a.cofactors {
        let t = cofactors(&d);
        for i in 0..d.len() {
            for j in 0..d.len() {
                out.push(
                    Computed::poly("cofactor", Some(format!("H[{i},{j}]")), t.h(i, j).to_string())
                        .field("i", i)
                        .field("j", j),
                );
            }
        }
    }
    if let Some(p) = a.schur {
        let s = schur_step(&d, p)?;
        let mut c = Computed::new(
            "schur",
            format!("pivot {p}: head {}, rest {}", s.head, s.rest),
        )
        .field("pivot", p)
        .field("head", s.head.to_string())
        .field("rest", s.rest.to_string());
        let branches: Vec<Value> = s
            .branches
            .iter()
            .map(|b| json!({"vertex": b.vertex, "weight": b.weight as i64, "poly": b.poly.to_string()}))
            .collect();
        let cross: Vec<Value> = s
            .cross
            .iter()
            .map(|t| json!({"i": t.i, "j": t.j, "weight": t.weight as i64, "twist": t.twist, "cofactor": t.cofactor.to_string()}))
            .collect();
        for b in &s.branches {
            c.text.push_str(&format!("\n  branch {} (weight {}): {}", b.vertex, b.weight, b.poly));
        }
        for t in &s.cross {
            c.text.push_str(&format!("\n  cross {},{} (weight {}, twist {}): {}", t.i, t.j, t.weight, t.twist, t.cofactor));
        }
        c = c.field("branches", branches).field("cross", cross);
        out.push(c);
        out.record(Record {
            suite: "schur".into(),
            case: format!("{name}: reassembly at {p}"),
            holds: s.reassemble() == coxeter_poly(&d),
            residual_terms: (&s.reassemble() - &coxeter_poly(&d)).len(),
            elapsed_ms: None,
        });
    }
    if let Some((i, j)) = a.paths {
        let p = path_sum_h(&d, i, j)?;
        out.push(Computed::poly("path_sum", Some(format!("H[{i},{j}] by paths")), p.to_string()));
    }
    if let Some((i, j)) = a.walks {
        let w = walk_gf(&d, i, j, a.max_len)?;
        let text: Vec<String> = w.iter().map(ToString::to_string).collect();
        out.push(
            Computed::new("walks", format!("walks {i}->{j}: {}", text.join(" ")))
                .field("i", i)
                .field("j", j)
                .field("counts", w.iter().map(|&c| c as i64).collect::<Vec<_>>()),
        );
    }
    if let Some((i, j)) = a.identity7 {
        let r = identity7_check(&d, i, j)?;
        out.record(Record {
            suite: "identity7".into(),
            case: format!("{name}: cofactor square {i},{j}"),
            holds: r.is_zero(),
            residual_terms: r.coeffs().iter().filter(|c| **c != 0).count(),
            elapsed_ms: None,
        });
    }
    Ok(out)
}

pub fn diagram(a: &DiagramArgs) -> CliResult<Output> {
    let mut d = match (&a.diagram, &a.join) {
        (Some(name), _) => load_diagram(name)?,
        (None, Some(text)) => Diagram::join(&parse_join(text)?)?,
        (None, None) => return usage("--diagram or --join is required"),
    };
    if let Some(vs) = &a.delete {
        d = d.delete(vs)?;
    }
    let text = d.to_string();
    let mut out = Output::default();
    out.push(Computed::new("diagram", text.trim_end()).field("diagram", text.as_str()));
    if a.bipartite {
        out.push(match d.bipartite_order() {
            Bipartition::Order(o) => Computed::new("bipartite", format!("bipartite order {o:?}")).field("order", o),
            Bipartition::NotBipartite { cycle } => {
                Computed::new("bipartite", format!("odd cycle {cycle:?}")).field("odd_cycle", cycle)
            }
        });
    }
    Ok(out)
}

pub fn cfrac(a: &CfracArgs, format: Format) -> CliResult<Output> {
    let d = load_diagram(&a.diagram)?;
    let cycle = KleinGroupData::from_name(&a.diagram)
        .ok()
        .filter(|k| k.family == Family::AffA)
        .map(|k| k.n);
    let c: CFracNode = match cycle {
        Some(n) => expand_cycle(n, a.depth.unwrap_or(n))?,
        None => {
            check_vertex(&d, a.root)?;
            expand_tree(&d, a.root)?
        }
    };
    let value = c.evaluate()?;
    let ascii = c.render(CFracFormat::Ascii).trim_end().to_string();
    let latex = c.render(CFracFormat::Latex);
    let text = match format {
        Format::Eval => value.to_string(),
        _ => ascii.clone(),
    };
    let tex = match format {
        Format::Eval => format!("\\[ {} \\]", to_latex(&value.to_string())),
        _ => format!("\\[ {latex} \\]"),
    };
    let mut out = Output::default();
    out.push(
        Computed::new("cfrac", text)
            .latex(tex)
            .field("diagram", a.diagram.as_str())
            .field("root", a.root)
            .field("ascii", ascii)
            .field("latex", latex)
            .field("value", value.to_string())
            .field("z_count", c.z_count()),
    );
    Ok(out)
}

pub fn divide(a: &DivideArgs) -> CliResult<Output> {
    let (ma, mb, mc) = (parse_int_matrix(&a.a)?, parse_int_matrix(&a.b)?, parse_int_matrix(&a.c)?);
    let r = divide_identity(&ma, &mb, &mc)?;
    let mut out = Output::default();
    out.push(
        Computed::new("divide", format!("det: {}\nlhs: {}\nrhs: {}", r.det, r.lhs, r.rhs))
            .field("det", r.det.to_string())
            .field("schur", r.schur.to_string())
            .field("lhs", r.lhs.to_string())
            .field("rhs", r.rhs.to_string()),
    );
    for (case, holds) in [("Schur factorization", r.schur_holds), ("simplified identity", r.equal)] {
        out.record(Record {
            suite: "divide".into(),
            case: case.into(),
            holds,
            residual_terms: usize::from(!holds),
            elapsed_ms: None,
        });
    }
    Ok(out)
}

pub fn poly(p: &PolyCommand) -> CliResult<Output> {
    let text = match p {
        PolyCommand::ZSub { poly } => ZPoly::parse(poly, "z")?.z_substitute().to_string(),
        PolyCommand::ToZ { poly } => ZPoly::q_to_z(&IntLaurent::parse(poly, "q")?)?.render("z"),
        PolyCommand::Bez { f, g } => bezoutian(&IntLaurent::parse(f, "q")?, &IntLaurent::parse(g, "q")?).to_string(),
        PolyCommand::Wr { f, g } => wronskian(&IntLaurent::parse(f, "q")?, &IntLaurent::parse(g, "q")?).to_string(),
        PolyCommand::Det { matrix } => {
            let m = parse_laurent_matrix(matrix)?;
            if !m.is_square() {
                return usage("determinant of a non-square matrix");
            }
            det_exact(&m).to_string()
        }
        PolyCommand::Sqrt1p { order } => sqrt1p(*order).render("u"),
    };
    let mut out = Output::default();
    out.push(Computed::poly("poly", None, text));
    Ok(out)
}

pub fn kostant(a: &KostantArgs, ctx: &Ctx) -> CliResult<Output> {
    let k = KleinGroupData::from_name(&a.kind)?;
    let mut out = Output::default();
    if a.series.is_none() && a.verify.is_none() {
        out.push(
            Computed::new(
                "klein",
                format!("{}: a={} b={} h={} |B|={}", k.name(), k.a, k.b, k.h, k.order),
            )
            .field("type", k.name())
            .field("a", k.a)
            .field("b", k.b)
            .field("h", k.h)
            .field("order", k.order),
        );
        for i in -1..=k.n as i64 {
            let z = k.z_at(i)?.to_string();
            out.push(
                Computed::poly("z", Some(format!("Z[{i}]")), z)
                    .field("type", k.name())
                    .field("vertex", i),
            );
        }
    }
    if let Some(i) = a.series {
        let s = poincare_series(&k, i, a.terms)?;
        out.push(
            Computed::poly("series", Some(format!("P[{i}] to q^{}", a.terms)), s.to_string())
                .field("type", k.name())
                .field("vertex", i)
                .field("terms", a.terms),
        );
    }
    if let Some(check) = a.verify {
        let start = Instant::now();
        let reports = crate::verify::kostant_reports(&k, check, a.walk_len, true)?;
        let ms = ctx.timings.then(|| start.elapsed().as_millis() as u64);
        for r in &reports {
            out.record(record("kostant", &k.name(), r, ms));
        }
    }
    Ok(out)
}

fn matrix_rows(m: &coxpoly::algebra::Matrix<IntLaurent>) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m.get(i, j).to_string()).collect())
        .collect()
}

fn report_record(out: &mut Output, suite: &str, target: &str, r: &IdentityReport, start: Instant, ctx: &Ctx) {
    let ms = ctx.timings.then(|| start.elapsed().as_millis() as u64);
    out.record(record(suite, target, r, ms));
}

pub fn braid(cmd: &BraidCommand, ctx: &Ctx) -> CliResult<Output> {
    let mut out = Output::default();
    let start = Instant::now();
    match cmd {
        BraidCommand::Burau { braid: w, reduced } => {
            let b = parse_braid(&w.word, w.strands)?;
            let kind = if *reduced { BurauKind::Reduced } else { BurauKind::Unreduced };
            let rows = matrix_rows(&braid::burau(&b, kind));
            let text: Vec<String> = rows.iter().map(|r| format!("[{}]", r.join(", "))).collect();
            let tex: Vec<String> = rows
                .iter()
                .map(|r| r.iter().map(|e| to_latex(e)).collect::<Vec<_>>().join(" & "))
                .collect();
            out.push(
                Computed::new("burau", text.join("\n"))
                    .latex(format!("\\[ \\begin{{pmatrix}} {} \\end{{pmatrix}} \\]", tex.join(" \\\\ ")))
                    .field("word", b.to_string())
                    .field("strands", b.strands())
                    .field("reduced", *reduced)
                    .field("matrix", rows),
            );
        }
        BraidCommand::Milnor { braid: w, order } => {
            let b = parse_braid(&w.word, w.strands)?;
            let t = braid::milnor(&b, *order)?;
            let mut lines = Vec::new();
            let mut entries = serde_json::Map::new();
            for (seq, c) in &t.entries {
                let key: Vec<String> = seq.iter().map(ToString::to_string).collect();
                lines.push(format!("mu({}) = {c}", key.join(",")));
                entries.insert(key.join(","), Value::from(*c as i64));
            }
            if lines.is_empty() {
                lines.push(format!("all invariants of length <= {order} vanish"));
            }
            out.push(
                Computed::new("milnor", lines.join("\n"))
                    .field("word", b.to_string())
                    .field("order", *order)
                    .field("entries", Value::Object(entries)),
            );
        }
        BraidCommand::Levin { braid: w, order } => {
            let b = parse_braid(&w.word, w.strands)?;
            let r = braid::levin_check(&b, *order)?;
            report_record(&mut out, "levin", &b.to_string(), &r, start, ctx);
        }
        BraidCommand::Ratio { braid: w, link, unreduced } => {
            let b = parse_braid(&w.word, w.strands)?;
            let l = parse_braid(link, Some(b.strands()))?;
            let kind = if *unreduced { BurauKind::Unreduced } else { BurauKind::Reduced };
            let ratio = braid::det_ratio(&l, &b, kind)?;
            out.push(
                Computed::poly("burau_ratio", None, ratio.to_string())
                    .field("link", l.to_string())
                    .field("word", b.to_string())
                    .field("reduced", !*unreduced),
            );
            match braid::conway_ratio_check(&l, &b) {
                Ok(r) => report_record(&mut out, "burau", &b.to_string(), &r, start, ctx),
                Err(coxpoly::Error::UnknownClosure(_)) => {}
                Err(e) => return Err(e.into()),
            }
        }
        BraidCommand::Artin { braid: w } => {
            let b = parse_braid(&w.word, w.strands)?;
            for (i, img) in braid::artin_action(&b).iter().enumerate() {
                out.push(
                    Computed::new("artin", format!("x{} -> {img}", i + 1))
                        .field("generator", i + 1)
                        .field("image", img.to_string()),
                );
            }
        }
        BraidCommand::Longitudes { braid: w } => {
            let b = parse_braid(&w.word, w.strands)?;
            for (i, l) in braid::longitudes(&b)?.iter().enumerate() {
                out.push(
                    Computed::new("longitude", format!("strand {}: {l}", i + 1))
                        .field("strand", i + 1)
                        .field("word", l.to_string()),
                );
            }
        }
        BraidCommand::Magnus { braid: w, strand, order } => {
            let b = parse_braid(&w.word, w.strands)?;
            let ls = braid::longitudes(&b)?;
            let Some(l) = strand.checked_sub(1).and_then(|s| ls.get(s)) else {
                return usage(format!("strand {strand} out of range 1..={}", ls.len()));
            };
            let m = braid::magnus(l, *order);
            out.push(
                Computed::new("magnus", m.to_string())
                    .field("strand", *strand)
                    .field("order", *order)
                    .field("series", m.to_string()),
            );
        }
    }
    Ok(out)
}
