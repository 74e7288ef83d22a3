use std::path::Path;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{parse_num, CliError};
use crate::cohomops::{Bockstein, Op, Space};
use crate::complex_core::{read_facet_file, ChainComplex, CohomClass};

enum OpArg {
    Plain(Op),
    Beta(u32),
    Cup,
}

fn parse_op(s: &str) -> Result<OpArg, CliError> {
    Ok(match s {
        "sq1" => OpArg::Plain(Op::Sq(1)),
        "sq2" => OpArg::Plain(Op::Sq(2)),
        "sq3" => OpArg::Plain(Op::Sq(3)),
        "d2" => OpArg::Plain(Op::D2),
        "sq2d2" => OpArg::Plain(Op::Sq2D2),
        "cup" => OpArg::Cup,
        _ => match s.strip_prefix("beta:") {
            Some(r) => {
                let r: u32 = parse_num(r, "Bockstein index")?;
                if !(1..=30).contains(&r) {
                    return Err(CliError::Usage(format!("Bockstein index {r} is outside 1..=30")));
                }
                OpArg::Beta(r)
            }
            None => return Err(CliError::Usage(format!("unknown operation {s:?}"))),
        },
    })
}

pub(super) fn load_space(spec: &str) -> Result<Space, CliError> {
    if let Some(rest) = spec.strip_prefix("moore:") {
        let (m, k) = rest
            .split_once(':')
            .ok_or_else(|| CliError::Usage("moore needs moore:M:K".into()))?;
        let c = ChainComplex::moore(parse_num(m, "Moore modulus")?, parse_num(k, "Moore degree")?)
            .map_err(|e| CliError::Usage(e.to_string()))?;
        return Ok(Space::synthetic(c)?);
    }
    let k = read_facet_file(Path::new(spec)).map_err(crate::profile::ProfileError::from)?;
    Ok(Space::simplicial(k)?)
}

/// Basis class named `DEGREE:INDEX:MODULUS`.
fn basis_class(s: &Space, spec: &str) -> Result<CohomClass, CliError> {
    let parts: Vec<&str> = spec.split(':').collect();
    let [d, i, m] = parts[..] else {
        return Err(CliError::Usage(format!("class {spec:?} is not DEGREE:INDEX:MODULUS")));
    };
    let (d, i, m): (usize, usize, u64) = (parse_num(d, "degree")?, parse_num(i, "index")?, parse_num(m, "modulus")?);
    if d > s.dimension() {
        return Err(CliError::Usage(format!("degree {d} exceeds the dimension {}", s.dimension())));
    }
    let g = s.cohomology(d, m)?;
    g.basis.get(i).cloned().ok_or_else(|| {
        CliError::Usage(format!("H^{d}(;Z/{m}) = {} has {} generators, no index {i}", g.group, g.rank()))
    })
}

fn describe(s: &Space, c: &CohomClass) -> Result<String, CliError> {
    if c.degree > s.dimension() {
        return Ok(format!("{}:-:{} zero (above the top degree)", c.degree, c.modulus));
    }
    let g = s.cohomology(c.degree, c.modulus)?;
    let coords = s.coordinates(&g, c)?;
    let zero = coords.iter().all(BigInt::is_zero);
    let list: Vec<String> = coords.iter().map(ToString::to_string).collect();
    Ok(format!(
        "{}:*:{} in H^{}(;Z/{}) = {}  coordinates [{}]  {}",
        c.degree,
        c.modulus,
        c.degree,
        c.modulus,
        g.group,
        list.join(", "),
        if zero { "zero" } else { "nonzero" }
    ))
}

pub(super) fn run_op(complex: &str, op: &str, class: &str, class2: Option<&str>) -> Result<String, CliError> {
    let s = load_space(complex)?;
    let a = basis_class(&s, class)?;
    let value = match parse_op(op)? {
        OpArg::Plain(op) => s.apply(op, &a)?,
        OpArg::Beta(r) => match s.bockstein(r, &a)? {
            Bockstein::Undefined => return Ok(format!("beta_{r}({class}) undefined: the class does not lift mod 2^{r}\n")),
            Bockstein::Value(v) => v,
        },
        OpArg::Cup => {
            let b = basis_class(&s, class2.ok_or_else(|| CliError::Usage("cup needs --class2".into()))?)?;
            s.cup(&a, &b)?
        }
    };
    Ok(format!("{op}({class}) = {}\n", describe(&s, &value)?))
}
