use alloc::vec::Vec;

use super::field::{span_rank, FpMatrix};
use super::hom::{hom_space, stable_hom_space, Morphism};
use super::rep::{build_simple_at, RepModule, Syzygy};
use super::OracleError;
use crate::quiver::ValuedQuiver;

/// `Ω(f): Ω(X) → Ω(Y)` for `f: X → Y`, by lifting `f` to the projective
/// covers and restricting to the kernels.
pub fn omega_morphism(f: &Morphism, x: &Syzygy, y: &Syzygy) -> Morphism {
    let p = x.module.prime();
    let px = &x.cover.module;
    let py = &y.cover.module;
    let mut lift: Vec<FpMatrix> = px.dims().iter().zip(py.dims()).map(|(&c, &r)| FpMatrix::zeros(p, r, c)).collect();
    for (summand, (t, g)) in x.cover.summands.iter().zip(&x.cover.generators) {
        let image = f.components[*t].mul_vec(g);
        let rhs = FpMatrix::from_columns(p, image.len(), &[image]);
        let pre = y.cover.surjection[*t].solve(&rhs).expect("projective covers are onto");
        let pre = pre.column(0);
        lift[*t].set_column(summand.top, &pre);
        for &(k, idx) in &summand.radical {
            let j = px.arrows()[k].1;
            lift[j].set_column(idx, &py.map(k).mul_vec(&pre));
        }
    }
    let components = lift
        .iter()
        .enumerate()
        .map(|(v, l)| {
            let image = l.mul(&x.kernels[v]);
            y.kernels[v].solve(&image).expect("lift maps kernel into kernel")
        })
        .collect();
    Morphism { components }
}

fn syzygy_chain(start: RepModule, len: usize) -> Vec<Syzygy> {
    let mut chain: Vec<Syzygy> = Vec::with_capacity(len);
    let mut current = start;
    for _ in 0..len {
        let s = Syzygy::of(&current);
        current = s.module.clone();
        chain.push(s);
    }
    chain
}

/// Dimension of `colim_m stHom(Ω^m S_a, Ω^{m-n} S_b)` with connecting maps
/// `Ω` applied to representatives.
///
/// With `r(m, M)` the rank of the composite connecting map from level `m`
/// to level `M` in the stable quotient, the answer is returned once
/// `r(m, M)` agrees for the three starting levels `m` just below
/// `depth - |V|` and the two final levels `M ∈ {depth - 1, depth}`.
/// Both syzygies reach the cyclic-like part once `m ≥ max(0, n) + |V|`,
/// and summands over sink-side tails need up to `|V|` more steps to become
/// projective, hence `depth ≥ max(0, n) + 2|V| + 3`. Otherwise the call
/// fails rather than guess.
pub fn colimit_hom_dim(
    q: &ValuedQuiver,
    a: usize,
    b: usize,
    n: i64,
    depth: usize,
    p: u32,
) -> Result<usize, OracleError> {
    let first = n.max(0) as usize;
    let gap = q.len();
    let needed = first + 2 * gap + 3;
    if depth < needed {
        return Err(OracleError::DepthTooSmall { depth, needed });
    }
    let shift = |m: usize| (m as i64 - n) as usize;
    // xs[m] = Syzygy of Ω^m S_a, so xs[m].module = Ω^{m+1} S_a.
    let xs = syzygy_chain(build_simple_at(q, a, p)?, depth);
    let ys = syzygy_chain(build_simple_at(q, b, p)?, shift(depth));
    let module_x = |m: usize| -> RepModule {
        if m == 0 {
            build_simple_at(q, a, p).expect("checked above")
        } else {
            xs[m - 1].module.clone()
        }
    };
    let module_y = |j: usize| -> RepModule {
        if j == 0 {
            build_simple_at(q, b, p).expect("checked above")
        } else {
            ys[j - 1].module.clone()
        }
    };

    let mut ranks = Vec::new();
    for m in depth - gap - 3..depth - gap {
        let basis = hom_space(&module_x(m), &module_y(shift(m)))?.basis;
        let mut current = basis;
        for level in m..depth {
            current = current.iter().map(|f| omega_morphism(f, &xs[level], &ys[shift(level)])).collect();
            if level + 2 < depth {
                continue;
            }
            let (mx, my) = (module_x(level + 1), module_y(shift(level + 1)));
            let len = mx.dims().iter().zip(my.dims()).map(|(c, r)| c * r).sum();
            let target = stable_hom_space(&mx, &my)?;
            let mut span: Vec<Vec<u8>> = target.projective_part.clone();
            span.extend(current.iter().map(Morphism::flatten));
            let r = span_rank(mx.prime(), len, &span) - target.projective_rank;
            ranks.push(r);
        }
    }
    if ranks.windows(2).all(|w| w[0] == w[1]) {
        Ok(ranks[0])
    } else {
        Err(OracleError::NotStabilized { depth })
    }
}
