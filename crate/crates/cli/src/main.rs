//! `sbt`: build, query, convert, verify and benchmark succinct binary trees.
//!
//! Exit status: 0 success, 1 verification failure, 2 usage error, 3 I/O or
//! format error.

mod bench;
mod input;
mod verify;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use succinct_bintree::reference::{
    decode_bp, decode_dfuds, decode_zaks, encode_bp, encode_dfuds, transform, untransform, zaks,
    LinkedBinaryTree,
};
use succinct_bintree::{
    BinaryNodeHandle, Error, OrderKind, RmqIndex, StreamStats, SuccinctBinaryTree, Variant,
};

use input::Source;

#[derive(Parser)]
#[command(
    name = "sbt",
    version,
    about = "Succinct binary trees and range-minimum indexes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Encode an array (as its Cartesian tree) or a Zaks sequence into a tree file.
    Build {
        /// Integers (text, or little-endian binary with a `.i64` extension) or a Zaks string.
        #[arg(long)]
        input: PathBuf,
        /// Transformation to store; defaults to t1, or t4 with --rmq.
        #[arg(long)]
        variant: Option<Variant>,
        /// Stream the range-minimum index of an array (variant t4).
        #[arg(long)]
        rmq: bool,
        #[arg(long)]
        out: PathBuf,
    },
    /// Answer a query on a tree file. Nodes are named by 1-based rank.
    #[command(group(ArgGroup::new("query").required(true).args(["rmq", "op"])))]
    Query {
        #[arg(long)]
        tree: PathBuf,
        /// Leftmost minimum position in [I, J], 1-based.
        #[arg(long, num_args = 2, value_names = ["I", "J"])]
        rmq: Option<Vec<usize>>,
        #[arg(long, value_enum)]
        op: Option<Op>,
        /// Node rank; repeat for one answer line per node.
        #[arg(long)]
        node: Vec<usize>,
        /// Second node for `lca`.
        #[arg(long)]
        with: Option<usize>,
        /// Numbering used for node ranks, in arguments and answers.
        #[arg(long, value_enum, default_value_t = Numbering::Inorder)]
        by: Numbering,
    },
    /// Convert between Zaks, BP and DFUDS encodings of a binary tree.
    Convert {
        #[arg(long, value_enum)]
        from: Format,
        #[arg(long, value_enum)]
        to: Format,
        /// Transformation behind a bp or dfuds source (default t1 for bp, t4 for dfuds).
        #[arg(long)]
        from_variant: Option<Variant>,
        /// Transformation behind a bp or dfuds target (same defaults).
        #[arg(long)]
        to_variant: Option<Variant>,
        /// Read from this file instead of standard input.
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Check every structure against the reference oracles on random inputs.
    Verify {
        #[arg(long, default_value_t = 256)]
        max_n: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trees: usize,
        /// Flip one bit of one encoding first; the run must then fail.
        #[arg(long)]
        corrupt: bool,
    },
    /// Time index construction and queries on random arrays (CSV).
    Bench {
        #[arg(
            long,
            value_delimiter = ',',
            default_value = "1000,10000,100000,1000000"
        )]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 100_000)]
        queries: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Op {
    Root,
    LeftChild,
    RightChild,
    Parent,
    SubtreeSize,
    Lca,
    IsLeaf,
    Inorder,
    Preorder,
    Postorder,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Numbering {
    Inorder,
    Preorder,
    Postorder,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Bp,
    Zaks,
    Dfuds,
}

struct Failure {
    code: u8,
    err: anyhow::Error,
}

fn usage(err: impl Into<anyhow::Error>) -> Failure {
    Failure {
        code: 2,
        err: err.into(),
    }
}

fn data(err: impl Into<anyhow::Error>) -> Failure {
    Failure {
        code: 3,
        err: err.into(),
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli.command, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            let _ = out.flush();
            eprintln!("sbt: {:#}", f.err);
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command, out: &mut impl Write) -> CliResult<()> {
    match command {
        Command::Build {
            input,
            variant,
            rmq,
            out: path,
        } => build(input, variant, rmq, path, out),
        Command::Query {
            tree,
            rmq,
            op,
            node,
            with,
            by,
        } => {
            let bytes = fs::read(&tree)
                .with_context(|| format!("reading {}", tree.display()))
                .map_err(data)?;
            let t = SuccinctBinaryTree::from_bytes(&bytes).map_err(data)?;
            match (rmq, op) {
                (Some(ij), _) => query_rmq(t, ij[0], ij[1], out),
                (None, Some(op)) => query_op(&t, op, &node, with, by, out),
                (None, None) => unreachable!("clap requires one of --rmq and --op"),
            }
        }
        Command::Convert {
            from,
            to,
            from_variant,
            to_variant,
            input,
        } => {
            let src = input::read_parens(input.as_deref()).map_err(data)?;
            let t = decode(&src, from, from_variant).map_err(data)?;
            writeln!(out, "{}", encode(&t, to, to_variant)).map_err(data)
        }
        Command::Verify {
            max_n,
            seed,
            trees,
            corrupt,
        } => {
            let checks = verify::run(&verify::Options {
                max_n,
                seed,
                trees,
                corrupt,
            });
            let io = |r: io::Result<()>| r.map_err(data);
            io(writeln!(out, "check,cases,failures"))?;
            for c in &checks {
                io(writeln!(out, "{},{},{}", c.name, c.cases, c.failures))?;
            }
            let failed: usize = checks.iter().map(|c| c.failures).sum();
            if failed > 0 {
                return Err(Failure {
                    code: 1,
                    err: anyhow!("{failed} checks failed"),
                });
            }
            Ok(())
        }
        Command::Bench {
            sizes,
            queries,
            seed,
        } => {
            if sizes.contains(&0) || queries == 0 {
                return Err(usage(anyhow!("sizes and query count must be positive")));
            }
            bench::run(&sizes, queries, seed, out).map_err(data)
        }
    }
}

fn build(
    input: PathBuf,
    variant: Option<Variant>,
    rmq: bool,
    path: PathBuf,
    out: &mut impl Write,
) -> CliResult<()> {
    if rmq && variant.is_some_and(|v| v != Variant::T4) {
        return Err(usage(anyhow!("--rmq stores variant t4")));
    }
    let variant = variant.unwrap_or(if rmq { Variant::T4 } else { Variant::T1 });
    let source = input::read_source(&input).map_err(data)?;
    let (tree, stats): (SuccinctBinaryTree, Option<StreamStats>) = match source {
        Source::Array(a) => {
            let (q, stats) = RmqIndex::build(&a);
            let tree = if variant == Variant::T4 {
                q.tree().clone()
            } else {
                let linked = untransform(Variant::T4, &decode_bp(&q.tree().bp()).map_err(data)?);
                SuccinctBinaryTree::from_linked(&linked, variant).map_err(data)?
            };
            (tree, Some(stats))
        }
        Source::Zaks(z) => {
            if rmq {
                return Err(usage(anyhow!("--rmq needs an array input")));
            }
            let linked = decode_zaks(&z).map_err(data)?;
            (
                SuccinctBinaryTree::from_linked(&linked, variant).map_err(data)?,
                None,
            )
        }
    };
    fs::write(&path, tree.to_bytes())
        .with_context(|| format!("writing {}", path.display()))
        .map_err(data)?;
    let (words, bits) = stats.map_or((String::new(), String::new()), |s| {
        (s.aux_peak_words.to_string(), s.aux_peak_bits.to_string())
    });
    writeln!(
        out,
        "n,variant,encoding_bits,index_bits,peak_aux_words,peak_aux_bits"
    )
    .map_err(data)?;
    writeln!(
        out,
        "{},{},{},{},{words},{bits}",
        tree.len(),
        tree.variant(),
        tree.encoding_bits(),
        tree.index_bits()
    )
    .map_err(data)
}

fn query_rmq(t: SuccinctBinaryTree, i: usize, j: usize, out: &mut impl Write) -> CliResult<()> {
    let q = RmqIndex::from_tree(t).map_err(usage)?;
    let k = q.rmq(i, j).map_err(usage)?;
    writeln!(out, "{k}").map_err(data)
}

fn query_op(
    t: &SuccinctBinaryTree,
    op: Op,
    nodes: &[usize],
    with: Option<usize>,
    by: Numbering,
    out: &mut impl Write,
) -> CliResult<()> {
    let kind = t.order_kind();
    let order_ok = |n: Numbering| match n {
        Numbering::Inorder => true,
        Numbering::Preorder => kind == OrderKind::Preorder,
        Numbering::Postorder => kind == OrderKind::Postorder,
    };
    let needs = |n: Numbering| {
        if order_ok(n) {
            Ok(())
        } else {
            Err(usage(anyhow!(
                "variant {} has no {} numbering",
                t.variant(),
                n.name()
            )))
        }
    };
    needs(by)?;
    let select = |k: usize| -> CliResult<BinaryNodeHandle> {
        let r = match by {
            Numbering::Inorder => t.select_inorder(k),
            _ => t.select_order(k),
        };
        r.map_err(|e| match e {
            Error::NotFound => usage(anyhow!(
                "no node with {} rank {k} (tree has {})",
                by.name(),
                t.len()
            )),
            e => data(e),
        })
    };
    let name = |x: BinaryNodeHandle| -> CliResult<String> {
        match by {
            Numbering::Inorder => t.inorder_rank(x),
            _ => t.order_rank(x),
        }
        .map(|k| k.to_string())
        .map_err(data)
    };
    let opt = |x: Option<BinaryNodeHandle>| x.map_or(Ok("none".to_string()), name);

    if let Op::Root = op {
        let line = opt(t.root())?;
        return writeln!(out, "{line}").map_err(data);
    }
    if nodes.is_empty() {
        return Err(usage(anyhow!("--op needs at least one --node")));
    }
    let other = match (op, with) {
        (Op::Lca, Some(w)) => Some(select(w)?),
        (Op::Lca, None) => return Err(usage(anyhow!("lca needs --with"))),
        _ => None,
    };
    match op {
        Op::Preorder => needs(Numbering::Preorder)?,
        Op::Postorder => needs(Numbering::Postorder)?,
        _ => {}
    }
    for &k in nodes {
        let x = select(k)?;
        let line = match op {
            Op::Root => unreachable!(),
            Op::LeftChild => opt(t.left_child(x).map_err(data)?)?,
            Op::RightChild => opt(t.right_child(x).map_err(data)?)?,
            Op::Parent => opt(t.parent(x).map_err(data)?)?,
            Op::SubtreeSize => t.subtree_size(x).map_err(data)?.to_string(),
            Op::Lca => name(t.lca(x, other.expect("checked above")).map_err(data)?)?,
            Op::IsLeaf => t.is_leaf(x).map_err(data)?.to_string(),
            Op::Inorder => t.inorder_rank(x).map_err(data)?.to_string(),
            Op::Preorder | Op::Postorder => t.order_rank(x).map_err(data)?.to_string(),
        };
        writeln!(out, "{line}").map_err(data)?;
    }
    Ok(())
}

impl Numbering {
    fn name(self) -> &'static str {
        match self {
            Numbering::Inorder => "inorder",
            Numbering::Preorder => "preorder",
            Numbering::Postorder => "postorder",
        }
    }
}

fn default_variant(f: Format) -> Variant {
    match f {
        Format::Dfuds => Variant::T4,
        _ => Variant::T1,
    }
}

fn decode(
    p: &succinct_bintree::Parens,
    from: Format,
    variant: Option<Variant>,
) -> anyhow::Result<LinkedBinaryTree> {
    let v = variant.unwrap_or(default_variant(from));
    Ok(match from {
        Format::Zaks => decode_zaks(p)?,
        Format::Bp => untransform(v, &decode_bp(p)?),
        Format::Dfuds => untransform(v, &decode_dfuds(p)?),
    })
}

fn encode(t: &LinkedBinaryTree, to: Format, variant: Option<Variant>) -> succinct_bintree::Parens {
    let v = variant.unwrap_or(default_variant(to));
    match to {
        Format::Zaks => zaks(t),
        Format::Bp => encode_bp(&transform(v, t).tree),
        Format::Dfuds => encode_dfuds(&transform(v, t).tree),
    }
}
