use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use simplex_fill::acyclic::random::{random_acyclic_configuration, random_complex, random_directed_configuration};
use simplex_fill::acyclic::{directed_graham_reduce, graham_reduce, is_chordal, Complex, ComplexFile};

use crate::args::{SampleArgs, SampleKind};
use crate::input::load;
use crate::report::{CliError, Outcome};

pub fn load_complex(arg: &str) -> Result<(Complex, bool), CliError> {
    let file: ComplexFile = load(arg)?;
    let c = file.complex().map_err(CliError::invalid)?;
    Ok((c, file.directed))
}

fn missing_spine_edge(c: &Complex) -> Option<[usize; 2]> {
    (1..c.ground()).map(|v| [v - 1, v]).find(|e| !c.membership(e))
}

pub fn check(arg: &str, directed_flag: bool) -> Result<Outcome, CliError> {
    let (c, directed_file) = load_complex(arg)?;
    let directed = directed_flag || directed_file;
    let graham = if directed { directed_graham_reduce(&c) } else { graham_reduce(&c) };
    let skeleton = c.skeleton1();
    let mut elimination = skeleton.mcs_order();
    elimination.reverse();
    let rip = if directed { c.directed_rip_order() } else { c.rip_order() };
    let acyclic = graham.is_acyclic();
    let label = match (directed, acyclic) {
        (true, true) => "directed-acyclic",
        (true, false) => "not directed-acyclic",
        (false, true) => "acyclic",
        (false, false) => "not acyclic",
    };
    let mut fields = json!({
        "complex": ComplexFile::of(&c, directed),
        "directed": directed,
        "verdict": label,
        "acyclic": acyclic,
        "elimination_order": graham.order,
        "spheres_filled": c.spheres_filled(),
        "chordal": is_chordal(&skeleton),
        "rip_order": rip,
    });
    if directed {
        fields["spine"] = Value::from(c.has_spine());
    }
    if acyclic {
        return Ok(Outcome::positive(fields));
    }
    let witness = json!({
        "residual_facets": graham.residual,
        "unfilled_sphere": c.unfilled_sphere(),
        "non_simplicial_vertex": skeleton.non_simplicial_vertex(&elimination),
        "missing_spine_edge": if directed { missing_spine_edge(&c) } else { None },
    });
    Ok(Outcome::negative(fields, witness))
}

pub fn rip(arg: &str, directed_flag: bool, tree: bool) -> Result<Outcome, CliError> {
    let (c, directed_file) = load_complex(arg)?;
    let directed = directed_flag || directed_file;
    let order = if directed { c.directed_rip_order() } else { c.rip_order() };
    let Some(order) = order else {
        let graham = if directed { directed_graham_reduce(&c) } else { graham_reduce(&c) };
        return Ok(Outcome::negative(
            json!({ "complex": ComplexFile::of(&c, directed), "directed": directed }),
            json!({ "residual_facets": graham.residual }),
        ));
    };
    let lines = order.tree_lines();
    let mut outcome = Outcome::positive(json!({ "directed": directed, "rip_order": order, "tree": lines }));
    if tree {
        outcome.text = Some(lines.join("\n"));
    }
    Ok(outcome)
}

/// The three characterizations, undirected then directed.
fn characterizations(c: &Complex) -> [[bool; 3]; 2] {
    let fillers = c.spheres_filled() && is_chordal(&c.skeleton1());
    [
        [c.is_graham_acyclic(), fillers, c.rip_order().is_some()],
        [c.is_directed_graham_acyclic(), fillers && c.has_spine(), c.directed_rip_order().is_some()],
    ]
}

pub fn sample(args: &SampleArgs) -> Result<Outcome, CliError> {
    if args.vertices == 0 || args.vertices > 12 {
        return Err(CliError::Invalid("--vertices must be between 1 and 12".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(args.run.seed);
    let (mut acyclic, mut directed) = (0usize, 0usize);
    let mut disagreements = Vec::new();
    for _ in 0..args.run.samples {
        let c = match args.kind {
            SampleKind::Any => random_complex(&mut rng, args.vertices),
            SampleKind::Acyclic => random_acyclic_configuration(&mut rng, args.vertices),
            SampleKind::Directed => random_directed_configuration(&mut rng, args.vertices),
        };
        let [undirected, dir] = characterizations(&c);
        acyclic += usize::from(undirected[0]);
        directed += usize::from(dir[0]);
        let agree = |v: [bool; 3]| v.iter().all(|&b| b == v[0]);
        if !agree(undirected) || !agree(dir) {
            disagreements.push(json!({
                "complex": ComplexFile::of(&c, false),
                "graham_fillers_rip": undirected,
                "directed_graham_fillers_rip": dir,
            }));
        }
    }
    let fields = json!({
        "seed": args.run.seed,
        "samples": args.run.samples,
        "vertices": args.vertices,
        "acyclic": acyclic,
        "directed_acyclic": directed,
    });
    if disagreements.is_empty() {
        Ok(Outcome::positive(fields))
    } else {
        Ok(Outcome::negative(fields, Value::from(disagreements)))
    }
}
