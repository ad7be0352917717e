use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::path::Path;

use surfgeo_core::{
    edge_graph, enumerate_cdcs, enumerate_reembeddings, enumerate_vertex_faithful_surfaces,
    face_graph, find_waists, oracle_reembeddings, parse_graph, parse_surface, reembedding_table,
    surface_from_cycles, write_faces, write_graph, write_tsv, write_umbrellas, Counting,
    SimplicialSurface, TargetSurface,
};

use crate::{Cli, Command, GenerateArgs, GraphKind, Target};

pub enum Failure {
    Domain(String),
    Usage(String),
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Domain(m) | Failure::Usage(m) => f.write_str(m),
        }
    }
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Domain(_) => 1,
            Failure::Usage(_) => 2,
        }
    }
}

impl From<surfgeo_core::Error> for Failure {
    fn from(e: surfgeo_core::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

type Outcome = Result<String, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))
}

fn load_surface(path: &Path) -> Result<SimplicialSurface, Failure> {
    Ok(parse_surface(&read(path)?)?)
}

impl From<Target> for TargetSurface {
    fn from(t: Target) -> Self {
        match t {
            Target::ProjectivePlane => TargetSurface::ProjectivePlane,
            Target::Torus => TargetSurface::Torus,
            Target::KleinBottle => TargetSurface::KleinBottle,
        }
    }
}

pub fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Validate { path } => validate(path),
        Command::Info { path } => info(path),
        Command::Graph { path, kind } => graph(path, *kind),
        Command::Embed {
            path,
            peripheral_only,
            min_chi,
        } => embed(path, *peripheral_only, *min_chi, cli.max_cycles),
        Command::Reembed {
            path,
            target,
            oracle,
            count,
        } => reembed(
            path,
            target.map(Into::into),
            *oracle,
            *count,
            cli.max_cycles,
        ),
        Command::Generate(args) => generate(args),
        Command::Table {
            max_faces,
            isomorphism_classes,
        } => {
            let counting = if *isomorphism_classes {
                Counting::Surfaces
            } else {
                Counting::Orbits
            };
            Ok(write_tsv(&reembedding_table(*max_faces, counting)?))
        }
    }
}

fn validate(path: &Path) -> Outcome {
    let s = load_surface(path)?;
    let class = s.classify()?;
    Ok(format!(
        "valid vertices={} edges={} faces={} class={}\n",
        s.num_vertices(),
        s.num_edges(),
        s.num_faces(),
        class.kind
    ))
}

fn info(path: &Path) -> Outcome {
    let s = load_surface(path)?;
    let class = s.classify()?;
    let vf = s.is_vertex_faithful();
    let waists = |n: usize| -> Result<String, Failure> {
        if !vf {
            return Ok("na".into());
        }
        Ok(find_waists(&s, n)?.len().to_string())
    };
    let (c4, c5) = match face_graph(&s) {
        Ok((g, _)) => (
            g.is_cyclically_k_arc_connected(4).to_string(),
            g.is_cyclically_k_arc_connected(5).to_string(),
        ),
        Err(_) => ("na".into(), "na".into()),
    };
    let pairs = [
        ("chi", class.euler_characteristic.to_string()),
        ("orientable", class.orientable.to_string()),
        ("genus", class.genus.to_string()),
        ("class", class.kind.to_string()),
        ("vertex_faithful", vf.to_string()),
        ("n_waists_3", waists(3)?),
        ("n_waists_4", waists(4)?),
        ("face_graph_cyclically_4_connected", c4),
        ("face_graph_cyclically_5_connected", c5),
    ];
    let line: Vec<String> = pairs.iter().map(|(k, v)| format!("{k}={v}")).collect();
    Ok(format!("{}\n", line.join(" ")))
}

fn graph(path: &Path, kind: GraphKind) -> Outcome {
    let s = load_surface(path)?;
    let (g, _) = match kind {
        GraphKind::Face => face_graph(&s)?,
        GraphKind::Edge => edge_graph(&s)?,
    };
    Ok(write_graph(&g))
}

fn embed(path: &Path, peripheral_only: bool, min_chi: Option<i64>, max_cycles: usize) -> Outcome {
    let g = parse_graph(&read(path)?)?;
    let surfaces: Vec<SimplicialSurface> = if peripheral_only {
        enumerate_vertex_faithful_surfaces(&g)?
    } else {
        let mut unique = BTreeMap::new();
        for cdc in enumerate_cdcs(&g, max_cycles)? {
            let s = surface_from_cycles(&g, &cdc)?;
            unique.entry(s.canonical_form()).or_insert(s);
        }
        unique.into_values().collect()
    };
    let mut keyed: Vec<(i64, Vec<u8>, SimplicialSurface)> = surfaces
        .into_iter()
        .filter(|s| min_chi.is_none_or(|c| s.euler_characteristic() >= c))
        .map(|s| (-s.euler_characteristic(), s.canonical_form(), s))
        .collect();
    keyed.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    let mut out = String::new();
    for (i, (_, _, s)) in keyed.iter().enumerate() {
        let class = s.classify()?;
        if i > 0 {
            out.push('\n');
        }
        let _ = writeln!(
            out,
            "# surface {} chi={} class={} vertex_faithful={}",
            i + 1,
            class.euler_characteristic,
            class.kind,
            s.is_vertex_faithful()
        );
        out.push_str(&write_umbrellas(s));
    }
    Ok(out)
}

fn reembed(
    path: &Path,
    target: Option<TargetSurface>,
    oracle: bool,
    count: bool,
    max_cycles: usize,
) -> Outcome {
    let s = load_surface(path)?;
    let targets: Vec<TargetSurface> = match target {
        Some(t) => vec![t],
        None => TargetSurface::ALL.to_vec(),
    };
    let mut out = String::new();
    if oracle {
        let mut first = true;
        for t in targets {
            let found = oracle_reembeddings(&s, t, max_cycles)?;
            if count {
                let _ = writeln!(out, "target={t} mode=oracle surfaces={}", found.len());
                continue;
            }
            for x in found {
                if !first {
                    out.push('\n');
                }
                first = false;
                let _ = writeln!(out, "surface target={t} mode=oracle");
                out.push_str(&write_umbrellas(&x));
            }
        }
        return Ok(out);
    }
    let classes = enumerate_reembeddings(&s, target)?;
    if count {
        for t in targets {
            let (k, n) = surfgeo_core::count_reembeddings(&classes, t);
            let _ = writeln!(out, "target={t} mode=pattern classes={k} surfaces={n}");
        }
        return Ok(out);
    }
    let mut first = true;
    for c in &classes {
        let nodes: Vec<String> = c.nodes.iter().map(u32::to_string).collect();
        for r in &c.realisations {
            if !first {
                out.push('\n');
            }
            first = false;
            let _ = writeln!(
                out,
                "class target={} pattern={} orbit_size={} nodes={{{}}}",
                c.target,
                r.pattern,
                c.orbit_size,
                nodes.join(",")
            );
            out.push_str(&write_umbrellas(&r.surface));
        }
    }
    Ok(out)
}

fn generate(args: &GenerateArgs) -> Outcome {
    let surfaces = match (&args.faces, &args.family) {
        (Some(n), _) => surfgeo_core::generate_spheres(*n)?,
        (None, Some(spec)) => vec![family(spec)?],
        (None, None) => return Err(Failure::Usage("give --faces or --family".into())),
    };
    let blocks: Vec<String> = surfaces.iter().map(write_faces).collect();
    Ok(blocks.join("\n"))
}

fn family(spec: &str) -> Result<SimplicialSurface, Failure> {
    let usage = || {
        Failure::Usage(format!(
            "unknown family {spec:?} (expected double-ngon:K or prop45:N)"
        ))
    };
    let (name, arg) = spec.split_once(':').ok_or_else(usage)?;
    let k: usize = arg.parse().map_err(|_| usage())?;
    match name {
        "double-ngon" => Ok(surfgeo_core::double_ngon(k)?),
        "prop45" => Ok(surfgeo_core::prop45_family(k)?),
        _ => Err(usage()),
    }
}
