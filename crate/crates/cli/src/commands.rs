//! Implementations of the subcommands. Each returns the rendered
//! stdout text; failures carry an exit code (2 invalid input, 3 method
//! precondition, 4 unwritable output, 1 formula/oracle mismatch).

use bgposet::oracle::{
    bfs_distance, bg_above_count, bg_below_count, chain_count_dp, max_antichain_dilworth,
    maximal_below_brute, maximal_chain_total,
};
use bgposet::{
    beta_general, bg_count, butterfly_count, count_maximal_chains, count_saturated_chains,
    edge_count, enumerate_bg, hasse_distance, leq_bb, leq_ehresmann, leq_reduction_oracle,
    level_size, max_antichain_size, maximal_below, minimal_above, sperner_decomposition, Count,
    Error, HassePoset, LengthVector, Limits,
};
use serde::Serialize;

use crate::output::{count_str, ElementRecord, Record, BOTH, FORMULA, ORACLE};
use crate::parse::{check_order, Element};
use crate::{dot, CliError, Format};

fn precondition(e: Error) -> CliError {
    CliError::new(3, e.to_string())
}

fn invalid(e: Error) -> CliError {
    CliError::new(2, e.to_string())
}

fn mismatch(
    what: &str,
    formula: &dyn std::fmt::Display,
    oracle: &dyn std::fmt::Display,
) -> CliError {
    CliError::new(
        1,
        format!("formula/oracle mismatch for {what}: formula={formula}, oracle={oracle}"),
    )
}

pub fn enumerate(n: usize, format: Format, limits: &Limits) -> Result<String, CliError> {
    check_order(n, 1, limits.max_order)?;
    let records: Vec<ElementRecord> = enumerate_bg(n)
        .map_err(invalid)?
        .iter()
        .map(ElementRecord::of)
        .collect();
    match format {
        Format::Csv => {
            let mut out = String::from(ElementRecord::csv_header());
            for r in &records {
                out.push('\n');
                out.push_str(&r.csv_row());
            }
            Ok(out)
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Inputs {
                n: usize,
            }
            Ok(Record {
                command: "enumerate",
                inputs: Inputs { n },
                result: records,
                provenance: FORMULA,
            }
            .render())
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Method {
    Auto,
    Ehresmann,
    Bb,
    Vector,
    Oracle,
}

pub fn compare(
    p: &Element,
    q: &Element,
    method: Method,
    limits: &Limits,
) -> Result<String, CliError> {
    let (pw, qw) = (p.permutation(), q.permutation());
    if pw.order() != qw.order() {
        return Err(invalid(Error::OrderMismatch(pw.order(), qw.order())));
    }
    check_order(pw.order(), 1, limits.max_order)?;
    let resolved = match method {
        Method::Auto => {
            if pw.is_bigrassmannian() && qw.is_bigrassmannian() {
                Method::Vector
            } else if pw.is_bigrassmannian() {
                Method::Bb
            } else {
                Method::Ehresmann
            }
        }
        other => other,
    };
    let leq = match resolved {
        Method::Ehresmann => leq_ehresmann(&pw, &qw).map_err(invalid)?,
        Method::Bb => leq_bb(&pw, &qw).map_err(precondition)?,
        Method::Vector => {
            let u = LengthVector::of(&pw).map_err(precondition)?;
            let v = LengthVector::of(&qw).map_err(precondition)?;
            u.leq(&v).map_err(invalid)?
        }
        Method::Oracle => {
            leq_reduction_oracle(&pw, &qw, limits.reduction_oracle_max).map_err(precondition)?
        }
        Method::Auto => unreachable!("resolved above"),
    };
    #[derive(Serialize)]
    struct Inputs {
        p: String,
        q: String,
        method: String,
    }
    #[derive(Serialize)]
    struct Outcome {
        leq: bool,
        method_used: String,
    }
    Ok(Record {
        command: "compare",
        inputs: Inputs {
            p: p.echo(),
            q: q.echo(),
            method: format!("{method:?}").to_lowercase(),
        },
        result: Outcome {
            leq,
            method_used: format!("{resolved:?}").to_lowercase(),
        },
        provenance: if resolved == Method::Oracle {
            ORACLE
        } else {
            FORMULA
        },
    }
    .render())
}

pub fn beta(elem: &Element, limits: &Limits) -> Result<String, CliError> {
    let p = elem.permutation();
    check_order(p.order(), 1, limits.max_order)?;
    let displacement = beta_general(&p);
    let vector_formula = if p.is_bigrassmannian() {
        let value = LengthVector::of(&p).map_err(invalid)?.beta();
        if value != displacement {
            return Err(mismatch("beta", &displacement, &value));
        }
        Some(count_str(&value))
    } else {
        None
    };
    let oracle = if p.order() <= limits.bg_sweep_max {
        let census = bg_below_count(&p).map_err(invalid)?;
        if census != displacement {
            return Err(mismatch("beta", &displacement, &census));
        }
        Some(count_str(&census))
    } else {
        None
    };
    #[derive(Serialize)]
    struct Inputs {
        element: String,
    }
    #[derive(Serialize)]
    struct Outcome {
        beta: String,
        #[serde(skip_serializing_if = "Option::is_none")]
        vector_formula: Option<String>,
        #[serde(skip_serializing_if = "Option::is_none")]
        oracle: Option<String>,
    }
    let provenance = if oracle.is_some() { BOTH } else { FORMULA };
    Ok(Record {
        command: "beta",
        inputs: Inputs {
            element: elem.echo(),
        },
        result: Outcome {
            beta: count_str(&displacement),
            vector_formula,
            oracle,
        },
        provenance,
    }
    .render())
}

pub fn alpha(elem: &Element, limits: &Limits) -> Result<String, CliError> {
    let v = elem.vector()?;
    check_order(v.order(), 2, limits.max_order)?;
    let formula = v.alpha();
    let oracle = if v.order() <= limits.bg_sweep_max {
        let census = bg_above_count(&v.permutation()).map_err(invalid)?;
        if census != formula {
            return Err(mismatch("alpha", &formula, &census));
        }
        Some(count_str(&census))
    } else {
        None
    };
    #[derive(Serialize)]
    struct Inputs {
        element: String,
    }
    #[derive(Serialize)]
    struct Outcome {
        alpha: String,
        #[serde(skip_serializing_if = "Option::is_none")]
        oracle: Option<String>,
    }
    let provenance = if oracle.is_some() { BOTH } else { FORMULA };
    Ok(Record {
        command: "alpha",
        inputs: Inputs {
            element: elem.echo(),
        },
        result: Outcome {
            alpha: count_str(&formula),
            oracle,
        },
        provenance,
    }
    .render())
}

pub fn vector(elem: &Element, limits: &Limits) -> Result<String, CliError> {
    let v = elem.vector()?;
    check_order(v.order(), 2, limits.max_order)?;
    #[derive(Serialize)]
    struct Inputs {
        element: String,
    }
    Ok(Record {
        command: "vector",
        inputs: Inputs {
            element: elem.echo(),
        },
        result: ElementRecord::of(&v),
        provenance: FORMULA,
    }
    .render())
}

#[derive(Serialize)]
struct LevelRow {
    level: usize,
    size: String,
}

#[derive(Serialize)]
struct StatsBlock {
    bg_count: String,
    edges: String,
    minimal: String,
    maximal: String,
    levels: Vec<LevelRow>,
    maximal_chains: String,
    butterflies: String,
    max_antichain: String,
}

fn stats_formula(n: usize) -> Result<StatsBlock, CliError> {
    let levels = (0..=n - 2)
        .map(|k| {
            Ok(LevelRow {
                level: k,
                size: count_str(&level_size(n, k).map_err(invalid)?),
            })
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    Ok(StatsBlock {
        bg_count: count_str(&bg_count(n)),
        edges: count_str(&edge_count(n).map_err(invalid)?),
        minimal: (n - 1).to_string(),
        maximal: (n - 1).to_string(),
        levels,
        maximal_chains: count_str(&count_maximal_chains(n).map_err(invalid)?),
        butterflies: count_str(&butterfly_count(n).map_err(invalid)?),
        max_antichain: count_str(&max_antichain_size(n).map_err(invalid)?),
    })
}

fn stats_oracle(n: usize) -> Result<StatsBlock, CliError> {
    let poset = HassePoset::build(n).map_err(invalid)?;
    let mut level_counts = vec![0usize; n - 1];
    for v in poset.vertices() {
        level_counts[v.level()] += 1;
    }
    let minimal = (0..poset.vertex_count())
        .filter(|&i| poset.down_covers(i).is_empty())
        .count();
    let maximal = (0..poset.vertex_count())
        .filter(|&i| poset.up_covers(i).is_empty())
        .count();
    Ok(StatsBlock {
        bg_count: poset.vertex_count().to_string(),
        edges: poset.edge_total().to_string(),
        minimal: minimal.to_string(),
        maximal: maximal.to_string(),
        levels: level_counts
            .iter()
            .enumerate()
            .map(|(level, size)| LevelRow {
                level,
                size: size.to_string(),
            })
            .collect(),
        maximal_chains: count_str(&maximal_chain_total(&poset)),
        butterflies: poset.butterflies().len().to_string(),
        max_antichain: max_antichain_dilworth(&poset).to_string(),
    })
}

pub fn stats(n: usize, format: Format, limits: &Limits) -> Result<String, CliError> {
    check_order(n, 2, limits.max_order)?;
    let formula = stats_formula(n)?;
    let oracle = if n <= limits.bg_sweep_max {
        let o = stats_oracle(n)?;
        let pairs = [
            ("bg_count", &formula.bg_count, &o.bg_count),
            ("edges", &formula.edges, &o.edges),
            ("minimal", &formula.minimal, &o.minimal),
            ("maximal", &formula.maximal, &o.maximal),
            ("maximal_chains", &formula.maximal_chains, &o.maximal_chains),
            ("butterflies", &formula.butterflies, &o.butterflies),
            ("max_antichain", &formula.max_antichain, &o.max_antichain),
        ];
        for (what, f, g) in pairs {
            if f != g {
                return Err(mismatch(what, f, g));
            }
        }
        for (f, g) in formula.levels.iter().zip(&o.levels) {
            if f.size != g.size {
                return Err(mismatch("level size", &f.size, &g.size));
            }
        }
        Some(o)
    } else {
        None
    };
    match format {
        Format::Csv => {
            let mut out = String::from("stat,value");
            let rows = [
                ("bg_count", &formula.bg_count),
                ("edges", &formula.edges),
                ("minimal", &formula.minimal),
                ("maximal", &formula.maximal),
                ("maximal_chains", &formula.maximal_chains),
                ("butterflies", &formula.butterflies),
                ("max_antichain", &formula.max_antichain),
            ];
            for (name, value) in rows {
                out.push_str(&format!("\n{name},{value}"));
            }
            for row in &formula.levels {
                out.push_str(&format!("\nlevel_{},{}", row.level, row.size));
            }
            Ok(out)
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Inputs {
                n: usize,
            }
            #[derive(Serialize)]
            struct Outcome {
                #[serde(flatten)]
                formula: StatsBlock,
                #[serde(skip_serializing_if = "Option::is_none")]
                oracle: Option<StatsBlock>,
            }
            let provenance = if oracle.is_some() { BOTH } else { FORMULA };
            Ok(Record {
                command: "stats",
                inputs: Inputs { n },
                result: Outcome { formula, oracle },
                provenance,
            }
            .render())
        }
    }
}

pub fn chains(lo: &Element, hi: &Element, limits: &Limits) -> Result<String, CliError> {
    let u = lo.vector()?;
    let v = hi.vector()?;
    check_order(u.order(), 2, limits.max_order)?;
    let formula = count_saturated_chains(&u, &v).map_err(precondition)?;
    let oracle = if u.order() <= limits.bg_sweep_max {
        let poset = HassePoset::build(u.order()).map_err(invalid)?;
        let i = poset.index_of(&u).expect("vector enumerated");
        let j = poset.index_of(&v).expect("vector enumerated");
        let dp = chain_count_dp(&poset, i, j);
        if dp != formula {
            return Err(mismatch("chains", &formula, &dp));
        }
        Some(count_str(&dp))
    } else {
        None
    };
    #[derive(Serialize)]
    struct Inputs {
        lo: String,
        hi: String,
    }
    #[derive(Serialize)]
    struct Outcome {
        length: usize,
        chains: String,
        #[serde(skip_serializing_if = "Option::is_none")]
        oracle: Option<String>,
    }
    let provenance = if oracle.is_some() { BOTH } else { FORMULA };
    Ok(Record {
        command: "chains",
        inputs: Inputs {
            lo: lo.echo(),
            hi: hi.echo(),
        },
        result: Outcome {
            length: v.level() - u.level(),
            chains: count_str(&formula),
            oracle,
        },
        provenance,
    }
    .render())
}

pub fn distance(a: &Element, b: &Element, limits: &Limits) -> Result<String, CliError> {
    let u = a.vector()?;
    let v = b.vector()?;
    check_order(u.order(), 2, limits.max_order)?;
    let formula = hasse_distance(&u, &v).map_err(invalid)?;
    let oracle = if u.order() <= limits.bg_sweep_max {
        let poset = HassePoset::build(u.order()).map_err(invalid)?;
        let i = poset.index_of(&u).expect("vector enumerated");
        let j = poset.index_of(&v).expect("vector enumerated");
        let bfs = bfs_distance(&poset, i, j)
            .ok_or_else(|| CliError::new(1, "diagram unexpectedly disconnected"))?;
        if Count::from(bfs) != formula {
            return Err(mismatch("distance", &formula, &bfs));
        }
        Some(bfs.to_string())
    } else {
        None
    };
    #[derive(Serialize)]
    struct Inputs {
        a: String,
        b: String,
    }
    #[derive(Serialize)]
    struct Outcome {
        distance: String,
        #[serde(skip_serializing_if = "Option::is_none")]
        oracle: Option<String>,
    }
    let provenance = if oracle.is_some() { BOTH } else { FORMULA };
    Ok(Record {
        command: "distance",
        inputs: Inputs {
            a: a.echo(),
            b: b.echo(),
        },
        result: Outcome {
            distance: count_str(&formula),
            oracle,
        },
        provenance,
    }
    .render())
}

pub fn antichain(n: usize, paths: bool, limits: &Limits) -> Result<String, CliError> {
    check_order(n, 2, limits.max_order)?;
    let formula = max_antichain_size(n).map_err(invalid)?;
    let oracle = if n <= limits.bg_sweep_max {
        let poset = HassePoset::build(n).map_err(invalid)?;
        let width = max_antichain_dilworth(&poset);
        if Count::from(width) != formula {
            return Err(mismatch("max antichain", &formula, &width));
        }
        Some(width.to_string())
    } else {
        None
    };
    let decomposition = if paths {
        Some(
            sperner_decomposition(n)
                .map_err(invalid)?
                .iter()
                .map(|path| path.iter().map(|v| v.to_string()).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        )
    } else {
        None
    };
    #[derive(Serialize)]
    struct Inputs {
        n: usize,
    }
    #[derive(Serialize)]
    struct Outcome {
        max_antichain: String,
        #[serde(skip_serializing_if = "Option::is_none")]
        oracle: Option<String>,
        #[serde(skip_serializing_if = "Option::is_none")]
        paths: Option<Vec<Vec<String>>>,
    }
    let provenance = if oracle.is_some() { BOTH } else { FORMULA };
    Ok(Record {
        command: "antichain",
        inputs: Inputs { n },
        result: Outcome {
            max_antichain: count_str(&formula),
            oracle,
            paths: decomposition,
        },
        provenance,
    }
    .render())
}

pub fn butterflies_cmd(n: usize, list: bool, limits: &Limits) -> Result<String, CliError> {
    check_order(n, 2, limits.max_order)?;
    let formula = butterfly_count(n).map_err(invalid)?;
    let enumerable = n <= limits.bg_sweep_max || (list && n <= limits.graph_export_max);
    if list && n > limits.graph_export_max {
        return Err(CliError::new(
            2,
            format!(
                "butterfly listing needs order <= {} (graph export cap)",
                limits.graph_export_max
            ),
        ));
    }
    let mut oracle = None;
    let mut listing = None;
    if enumerable {
        let poset = HassePoset::build(n).map_err(invalid)?;
        let all = poset.butterflies();
        if Count::from(all.len()) != formula {
            return Err(mismatch("butterflies", &formula, &all.len()));
        }
        oracle = Some(all.len().to_string());
        if list {
            listing = Some(
                all.iter()
                    .map(|b| {
                        [
                            b.lower[0].to_string(),
                            b.lower[1].to_string(),
                            b.upper[0].to_string(),
                            b.upper[1].to_string(),
                        ]
                    })
                    .collect::<Vec<_>>(),
            );
        }
    }
    #[derive(Serialize)]
    struct Inputs {
        n: usize,
    }
    #[derive(Serialize)]
    struct Outcome {
        butterflies: String,
        #[serde(skip_serializing_if = "Option::is_none")]
        oracle: Option<String>,
        #[serde(skip_serializing_if = "Option::is_none")]
        list: Option<Vec<[String; 4]>>,
    }
    let provenance = if oracle.is_some() { BOTH } else { FORMULA };
    Ok(Record {
        command: "butterflies",
        inputs: Inputs { n },
        result: Outcome {
            butterflies: count_str(&formula),
            oracle,
            list: listing,
        },
        provenance,
    }
    .render())
}

pub fn below(elems: &[Element], above: bool, limits: &Limits) -> Result<String, CliError> {
    let targets = elems
        .iter()
        .map(Element::vector)
        .collect::<Result<Vec<_>, CliError>>()?;
    let first = targets
        .first()
        .ok_or_else(|| CliError::new(2, Error::EmptyTargetSet.to_string()))?;
    let n = first.order();
    check_order(n, 2, limits.max_order)?;
    let result = if above {
        minimal_above(&targets).map_err(invalid)?
    } else {
        maximal_below(&targets).map_err(invalid)?
    };
    let oracle = if n <= limits.bg_sweep_max {
        let vecs = enumerate_bg(n).map_err(invalid)?;
        let brute = if above {
            maximal_below_brute(&vecs, &targets, |u, v| v.leq(u).unwrap())
        } else {
            maximal_below_brute(&vecs, &targets, |u, v| u.leq(v).unwrap())
        };
        if brute != result {
            return Err(mismatch("bounds", &result.len(), &brute.len()));
        }
        Some(brute.iter().map(|v| v.to_string()).collect::<Vec<_>>())
    } else {
        None
    };
    #[derive(Serialize)]
    struct Inputs {
        targets: Vec<String>,
        direction: &'static str,
    }
    #[derive(Serialize)]
    struct Outcome {
        elements: Vec<ElementRecord>,
        count: usize,
        #[serde(skip_serializing_if = "Option::is_none")]
        oracle: Option<Vec<String>>,
    }
    let provenance = if oracle.is_some() { BOTH } else { FORMULA };
    Ok(Record {
        command: "below",
        inputs: Inputs {
            targets: elems.iter().map(Element::echo).collect(),
            direction: if above {
                "minimal-above"
            } else {
                "maximal-below"
            },
        },
        result: Outcome {
            count: result.len(),
            elements: result.iter().map(ElementRecord::of).collect(),
            oracle,
        },
        provenance,
    }
    .render())
}

pub struct HasseArgs<'a> {
    pub n: usize,
    pub dot_path: Option<&'a std::path::Path>,
    pub downset: Option<&'a Element>,
    pub upset: Option<&'a Element>,
}

pub fn hasse(args: HasseArgs<'_>, limits: &Limits) -> Result<String, CliError> {
    check_order(args.n, 2, limits.max_order.min(limits.graph_export_max))?;
    let poset = HassePoset::build(args.n).map_err(invalid)?;
    let resolve = |elem: Option<&Element>| -> Result<Option<LengthVector>, CliError> {
        let Some(e) = elem else { return Ok(None) };
        let v = e.vector().map_err(|e| CliError::new(2, e.message))?;
        if poset.index_of(&v).is_none() {
            return Err(CliError::new(
                2,
                format!("{v} is not a vertex of the order-{} diagram", args.n),
            ));
        }
        Ok(Some(v))
    };
    let downset = resolve(args.downset)?;
    let upset = resolve(args.upset)?;
    let text = dot::render(&poset, downset.as_ref(), upset.as_ref());
    match args.dot_path {
        Some(path) => {
            std::fs::write(path, &text)
                .map_err(|e| CliError::new(4, format!("cannot write {}: {e}", path.display())))?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}
