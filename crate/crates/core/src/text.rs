//! Plain-text formats for posets, partial-conjugate sequences and profiles.
//!
//! Poset:
//!
//! ```text
//! elements: x y z
//! # one strict pair per line, reflexive pairs implicit
//! x > y
//! ```
//!
//! A line may also hold a chain `x > y > z`, read as its consecutive pairs.
//! Sequences are poset blocks separated by `---` lines; only the first block
//! carries the `elements:` header. Profiles list one ranking per agent,
//! best first: `agent 1: x y z`.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::fold::PcSequence;
use crate::pareto::Profile;
use crate::relation::{GroundSet, LinearOrder, PartialOrder, Relation};

const SEPARATOR: &str = "---";

/// Non-blank lines with comments stripped, paired with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn parse_header(line_no: usize, line: &str) -> Result<GroundSet> {
    let rest = line
        .strip_prefix("elements:")
        .ok_or_else(|| Error::parse(line_no, "expected `elements: <label> ...`"))?;
    GroundSet::new(rest.split_whitespace()).map_err(|e| Error::parse(line_no, e.to_string()))
}

fn parse_pairs<'a>(
    ground: &GroundSet,
    lines: impl Iterator<Item = (usize, &'a str)>,
) -> Result<Vec<(String, String)>> {
    let mut pairs = Vec::new();
    for (line_no, line) in lines {
        let labels: Vec<&str> = line.split('>').map(str::trim).collect();
        if labels.len() < 2 {
            return Err(Error::parse(
                line_no,
                format!("expected `<a> > <b>`, found {line:?}"),
            ));
        }
        for w in labels.windows(2) {
            let (a, b) = (w[0], w[1]);
            for l in [a, b] {
                if ground.index_of(l).is_none() {
                    return Err(Error::parse(
                        line_no,
                        format!("unknown element label {l:?}"),
                    ));
                }
            }
            if a == b {
                return Err(Error::parse(
                    line_no,
                    format!("strict pair {a} > {a} is reflexive"),
                ));
            }
            pairs.push((a.to_string(), b.to_string()));
        }
    }
    Ok(pairs)
}

fn to_order(rel: Relation, close: bool, line_no: usize) -> Result<PartialOrder> {
    let rel = if close { rel.transitive_closure() } else { rel };
    PartialOrder::new(rel).map_err(|e| Error::parse(line_no, e.to_string()))
}

/// Reads the strict pairs plus the diagonal, without checking order axioms.
pub fn parse_relation(text: &str) -> Result<Relation> {
    let mut lines = content_lines(text);
    let (line_no, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing `elements:` header"))?;
    let ground = parse_header(line_no, header)?;
    let pairs = parse_pairs(&ground, lines)?;
    Relation::from_pairs(&ground, pairs, true)
}

/// Reads a poset. With `close`, the reflexive-transitive closure of the
/// listed pairs is taken before validation.
pub fn parse_poset(text: &str, close: bool) -> Result<PartialOrder> {
    let rel = parse_relation(text)?;
    to_order(rel, close, 1)
}

pub fn parse_linear_order(text: &str, close: bool) -> Result<LinearOrder> {
    LinearOrder::new(parse_poset(text, close)?)
}

/// Header line followed by every strict pair in row-major order.
pub fn write_relation(rel: &Relation) -> String {
    let mut out = format!("elements: {}\n", rel.ground().labels().join(" "));
    for (a, b) in rel.strict_pairs() {
        writeln!(out, "{a} > {b}").unwrap();
    }
    out
}

pub fn write_poset(p: &PartialOrder) -> String {
    write_relation(p.relation())
}

pub fn parse_sequence(text: &str, close: bool) -> Result<PcSequence> {
    let mut blocks: Vec<Vec<(usize, &str)>> = vec![Vec::new()];
    for (line_no, line) in content_lines(text) {
        if line == SEPARATOR {
            blocks.push(Vec::new());
        } else {
            blocks.last_mut().unwrap().push((line_no, line));
        }
    }
    let first = &blocks[0];
    let (hdr_no, hdr) = *first
        .first()
        .ok_or_else(|| Error::parse(1, "missing `elements:` header"))?;
    let ground = parse_header(hdr_no, hdr)?;
    let mut parts = Vec::with_capacity(blocks.len());
    for (b, block) in blocks.iter().enumerate() {
        let body = if b == 0 { &block[1..] } else { &block[..] };
        let at = block.first().map_or(hdr_no, |l| l.0);
        let pairs = parse_pairs(&ground, body.iter().copied())?;
        let rel = Relation::from_pairs(&ground, pairs, true)?;
        parts.push(to_order(rel, close, at)?);
    }
    PcSequence::new(parts)
}

pub fn write_sequence(seq: &PcSequence) -> String {
    let mut out = String::new();
    for (k, part) in seq.parts().iter().enumerate() {
        if k == 0 {
            out.push_str(&write_poset(part));
        } else {
            out.push_str(SEPARATOR);
            out.push('\n');
            for (a, b) in part.relation().strict_pairs() {
                writeln!(out, "{a} > {b}").unwrap();
            }
        }
    }
    out
}

pub fn parse_profile(text: &str) -> Result<Profile> {
    let mut lines = content_lines(text);
    let (line_no, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing `elements:` header"))?;
    let ground = parse_header(line_no, header)?;
    let mut agents = Vec::new();
    for (line_no, line) in lines {
        let (head, ranking) = line
            .split_once(':')
            .ok_or_else(|| Error::parse(line_no, "expected `agent <id>: <label> ...`"))?;
        if head.split_whitespace().next() != Some("agent") {
            return Err(Error::parse(line_no, "expected `agent <id>: <label> ...`"));
        }
        if ranking.contains(['=', '~', ',']) {
            return Err(Error::parse(
                line_no,
                "indifference is not supported; rankings must be strict",
            ));
        }
        let labels: Vec<&str> = ranking.split_whitespace().collect();
        let order = LinearOrder::from_ranking(&ground, &labels)
            .map_err(|e| Error::parse(line_no, e.to_string()))?;
        agents.push(order);
    }
    Profile::new(ground, agents).map_err(|e| Error::parse(line_no, e.to_string()))
}

pub fn write_profile(profile: &Profile) -> String {
    let mut out = format!("elements: {}\n", profile.ground().labels().join(" "));
    for (i, a) in profile.agents().iter().enumerate() {
        writeln!(out, "agent {}: {}", i + 1, a.ranking().join(" ")).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poset_round_trip() {
        let text = "# comment\nelements: x y z\n\nx > y   # strict\n";
        let p = parse_poset(text, false).unwrap();
        assert_eq!(write_poset(&p), "elements: x y z\nx > y\n");
        assert_eq!(parse_poset(&write_poset(&p), false).unwrap(), p);
    }

    #[test]
    fn closure_flag() {
        let text = "elements: x y z\nx > y\ny > z\n";
        assert!(matches!(parse_poset(text, false), Err(Error::Parse { .. })));
        let p = parse_poset(text, true).unwrap();
        assert!(p.contains("x", "z"));
        let chain = parse_linear_order("elements: x y z\nz > x > y\n", true).unwrap();
        assert_eq!(chain.ranking(), vec!["z", "x", "y"]);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = parse_poset("elements: x y\n\nx > w\n", false).unwrap_err();
        assert_eq!(err, Error::parse(3, "unknown element label \"w\""));
        assert!(matches!(
            parse_poset("x > y\n", false),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(parse_poset("", false), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_poset("elements: x y\nx y\n", false),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_poset("elements: x y\nx > x\n", false),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_poset("elements: x x\n", false),
            Err(Error::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn cyclic_input_is_not_a_poset_even_closed() {
        let text = "elements: x y\nx > y\ny > x\n";
        assert!(parse_relation(text).is_ok());
        assert!(parse_poset(text, true).is_err());
    }

    #[test]
    fn sequence_round_trip() {
        let text = "elements: x y z\nx > y\n---\nx > z\ny > z\n";
        let seq = parse_sequence(text, false).unwrap();
        assert_eq!(seq.len(), 2);
        assert_eq!(write_sequence(&seq), text);
        let empty_tail = parse_sequence("elements: x y\n---\n", false).unwrap();
        assert_eq!(
            empty_tail.parts()[1],
            PartialOrder::antichain(empty_tail.ground())
        );
    }

    #[test]
    fn profile_parsing() {
        let text = "elements: x y z\nagent 1: x y z\nagent 2: z x y\n";
        let prof = parse_profile(text).unwrap();
        assert_eq!(prof.len(), 2);
        assert_eq!(write_profile(&prof), text);
        let tie = parse_profile("elements: x y\nagent 1: x=y\n").unwrap_err();
        assert!(tie.to_string().contains("indifference"));
        assert!(parse_profile("elements: x y\nagent 1: x\n").is_err());
        assert!(parse_profile("elements: x y\n").is_err());
        assert!(parse_profile("elements: x y\nvoter 1: x y\n").is_err());
    }
}
