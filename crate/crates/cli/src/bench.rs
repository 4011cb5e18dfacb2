use std::hint::black_box;
use std::io::Write;
use std::time::Instant;

use anyhow::Result;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use succinct_bintree::RmqIndex;

pub const HEADER: &str =
    "n,build_ms,peak_aux_bits,rmq_ns,select_inorder_ns,parent_ns,lca_ns,encoding_bits_per_node,total_bits_per_node";

fn per_query_ns(queries: usize, mut f: impl FnMut()) -> f64 {
    let start = Instant::now();
    for _ in 0..queries {
        f();
    }
    start.elapsed().as_secs_f64() * 1e9 / queries as f64
}

/// One CSV row per size: stream-builds the range-minimum index of a random
/// array and times queries on it.
pub fn run(sizes: &[usize], queries: usize, seed: u64, out: &mut impl Write) -> Result<()> {
    writeln!(out, "{HEADER}")?;
    for &n in sizes {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ n as u64);
        let a: Vec<i64> = (0..n).map(|_| rng.gen()).collect();
        let start = Instant::now();
        let (q, stats) = RmqIndex::build(&a);
        let build_ms = start.elapsed().as_secs_f64() * 1e3;
        drop(a);
        let t = q.tree();
        let pairs: Vec<(usize, usize)> = (0..queries)
            .map(|_| {
                let (i, j) = (rng.gen_range(1..=n), rng.gen_range(1..=n));
                (i.min(j), i.max(j))
            })
            .collect();
        let nodes: Vec<_> = pairs
            .iter()
            .map(|&(i, _)| t.select_inorder(i).unwrap())
            .collect();
        let mut it = pairs.iter().cycle();
        let rmq_ns = per_query_ns(queries, || {
            let &(i, j) = it.next().unwrap();
            black_box(q.rmq(i, j).unwrap());
        });
        let mut it = pairs.iter().cycle();
        let select_ns = per_query_ns(queries, || {
            black_box(t.select_inorder(it.next().unwrap().1).unwrap());
        });
        let mut it = nodes.iter().cycle();
        let parent_ns = per_query_ns(queries, || {
            black_box(t.parent(*it.next().unwrap()).unwrap());
        });
        let mut it = nodes.iter().zip(nodes.iter().rev()).cycle();
        let lca_ns = per_query_ns(queries, || {
            let (&u, &w) = it.next().unwrap();
            black_box(t.lca(u, w).unwrap());
        });
        let enc = t.encoding_bits() as f64 / n as f64;
        let total = (t.encoding_bits() + t.index_bits()) as f64 / n as f64;
        writeln!(
            out,
            "{n},{build_ms:.3},{},{rmq_ns:.0},{select_ns:.0},{parent_ns:.0},{lca_ns:.0},{enc:.4},{total:.4}",
            stats.aux_peak_bits
        )?;
    }
    Ok(())
}
