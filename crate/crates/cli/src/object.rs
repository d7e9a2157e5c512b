//! Object syntax: `shproj:<i>`, `post:<i>:<m>`, `preinj:<i>:<m>`,
//! `reg:<λ>:<k>:<l>`, and sums of these joined by `+`.

use euclid_frieze::{Error, Lambda, ObjectSpec, Quiver, RegularIndex, Result, TransjectiveLabel};

fn vertex(q: &Quiver, tok: &str, s: &str) -> Result<usize> {
    q.vertex_index(s)
        .ok_or_else(|| Error::Parse(format!("in '{tok}': unknown vertex '{s}'")))
}

fn number<T: std::str::FromStr>(tok: &str, s: &str, what: &str) -> Result<T> {
    s.parse().map_err(|_| Error::Parse(format!("in '{tok}': {what} '{s}' is not a valid number")))
}

fn summand(q: &Quiver, tok: &str) -> Result<ObjectSpec> {
    let parts: Vec<&str> = tok.split(':').collect();
    let spec = match parts.as_slice() {
        ["shproj", i] => ObjectSpec::Transjective(TransjectiveLabel::ShiftedProjective(vertex(q, tok, i)?)),
        ["post", i, m] => {
            ObjectSpec::Transjective(TransjectiveLabel::PostProjective(vertex(q, tok, i)?, number(tok, m, "m")?))
        }
        ["preinj", i, m] => {
            ObjectSpec::Transjective(TransjectiveLabel::PreInjective(vertex(q, tok, i)?, number(tok, m, "m")?))
        }
        ["reg", lambda, k, l] => {
            let lambda: Lambda = lambda.parse().map_err(|e: Error| Error::Parse(format!("in '{tok}': {e}")))?;
            let l: u32 = number(tok, l, "l")?;
            if l == 0 {
                return Err(Error::Parse(format!("in '{tok}': quasi-length must be at least 1")));
            }
            ObjectSpec::Regular(RegularIndex::new(lambda, number(tok, k, "k")?, l))
        }
        _ => {
            return Err(Error::Parse(format!(
                "unrecognised object '{tok}'; expected shproj:i, post:i:m, preinj:i:m or reg:λ:k:l"
            )))
        }
    };
    Ok(spec)
}

pub fn parse_object(q: &Quiver, text: &str) -> Result<ObjectSpec> {
    let toks: Vec<&str> = text.split('+').map(str::trim).collect();
    if toks.iter().any(|t| t.is_empty()) {
        return Err(Error::Parse(format!("empty summand in '{text}'")));
    }
    let mut parts = toks.iter().map(|t| summand(q, t)).collect::<Result<Vec<_>>>()?;
    Ok(if parts.len() == 1 { parts.pop().unwrap() } else { ObjectSpec::DirectSum(parts) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use euclid_frieze::{CanonicalModel, EuclideanType};

    #[test]
    fn grammar() {
        let m = CanonicalModel::build(EuclideanType::E6).unwrap();
        let q = &m.quiver;
        assert_eq!(
            parse_object(q, "shproj:4").unwrap(),
            ObjectSpec::Transjective(TransjectiveLabel::ShiftedProjective(3))
        );
        assert_eq!(
            parse_object(q, "reg:inf:2:3 + post:1:0").unwrap(),
            ObjectSpec::DirectSum(vec![
                ObjectSpec::Regular(RegularIndex::new(Lambda::Infinity, 2, 3)),
                ObjectSpec::Transjective(TransjectiveLabel::PostProjective(0, 0)),
            ])
        );
        for bad in ["post:9:0", "reg:2:0:1", "preinj:1", "reg:0:0:0", "post:1:x", "shproj:1+"] {
            let e = parse_object(q, bad).unwrap_err();
            assert!(matches!(e, Error::Parse(_)), "{bad}: {e}");
        }
        assert!(parse_object(q, "post:9:0").unwrap_err().to_string().contains("'post:9:0'"));
    }
}
