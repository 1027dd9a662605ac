//! Text, JSON and DOT interchange for diagrams and labelled systems.
//!
//! Text form: `n=<int>;chords=(a,b)(c,d)...`, whitespace-insensitive, with
//! optional `;mark=<int>;sign=<+1|-1>` orientation fields. Labelled files
//! add one `label <chord-index>: <word>` line per chord. Parse failures
//! carry a line/column diagnostic.

use crate::diagram::ChordDiagram;
use crate::labelled::{LabelledDiagram, OrientedLabelled};
use crate::oriented::OrientedDiagram;
use crate::words::GroupWord;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}, column {col}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

impl ParseError {
    fn new(line: usize, col: usize, msg: impl Into<String>) -> Self {
        ParseError {
            line,
            col,
            msg: msg.into(),
        }
    }
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
    line: usize,
    col: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str, line: usize) -> Self {
        Cursor {
            text,
            pos: 0,
            line,
            col: 1,
        }
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.bump();
        }
    }

    fn expect(&mut self, token: &str) -> Result<(), ParseError> {
        for want in token.chars() {
            self.skip_ws();
            match self.peek() {
                Some(c) if c == want => {
                    self.bump();
                }
                got => {
                    return Err(ParseError::new(
                        self.line,
                        self.col,
                        format!(
                            "expected `{want}`{}",
                            match got {
                                Some(c) => format!(", found `{c}`"),
                                None => ", found end of input".to_string(),
                            }
                        ),
                    ));
                }
            }
        }
        Ok(())
    }

    fn eat(&mut self, token: &str) -> bool {
        let save = (self.pos, self.line, self.col);
        for want in token.chars() {
            self.skip_ws();
            if self.peek() == Some(want) {
                self.bump();
            } else {
                (self.pos, self.line, self.col) = save;
                return false;
            }
        }
        true
    }

    fn number(&mut self) -> Result<i64, ParseError> {
        self.skip_ws();
        let (line, col) = (self.line, self.col);
        let mut s = String::new();
        if matches!(self.peek(), Some('+') | Some('-')) {
            s.push(self.bump().unwrap());
        }
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            s.push(self.bump().unwrap());
        }
        s.parse()
            .map_err(|_| ParseError::new(line, col, "expected a number"))
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.peek().is_none()
    }
}

/// Parses the one-line diagram form, with optional orientation fields.
fn parse_header(text: &str, line_no: usize) -> Result<OrientedDiagram, ParseError> {
    let mut c = Cursor::new(text, line_no);
    c.expect("n=")?;
    let n = c.number()?;
    if n <= 0 {
        return Err(ParseError::new(
            c.line,
            c.col,
            "chord count must be positive",
        ));
    }
    let n = n as usize;
    c.expect(";")?;
    c.expect("chords=")?;
    let mut chords: Vec<(usize, usize)> = Vec::new();
    let mut spans: Vec<(usize, usize)> = Vec::new();
    while c.eat("(") {
        let (line, col) = (c.line, c.col);
        let a = c.number()?;
        c.expect(",")?;
        let b = c.number()?;
        c.expect(")")?;
        if a < 0 || b < 0 {
            return Err(ParseError::new(line, col, "points are nonnegative"));
        }
        chords.push((a as usize, b as usize));
        spans.push((line, col));
    }
    let diagram = match ChordDiagram::new(n, &chords) {
        Ok(d) => d,
        Err(e) => {
            let (line, col) = spans.last().copied().unwrap_or((c.line, c.col));
            return Err(ParseError::new(line, col, e.to_string()));
        }
    };
    let mut marker = 0usize;
    let mut sign = 1i64;
    if c.eat(";") {
        if c.eat("mark=") {
            let m = c.number()?;
            if m < 0 || m as usize >= diagram.points() {
                return Err(ParseError::new(c.line, c.col, "marker out of range"));
            }
            marker = m as usize;
        }
        if c.eat(";") {
            c.expect("sign=")?;
            let s = c.number()?;
            if s != 1 && s != -1 {
                return Err(ParseError::new(c.line, c.col, "sign must be +1 or -1"));
            }
            sign = s;
        }
    }
    if !c.at_end() {
        return Err(ParseError::new(c.line, c.col, "unexpected trailing input"));
    }
    Ok(OrientedDiagram::new(diagram, marker, sign))
}

pub fn parse_diagram(text: &str) -> Result<ChordDiagram, ParseError> {
    parse_header(text.trim(), 1).map(|o| o.diagram)
}

pub fn parse_oriented(text: &str) -> Result<OrientedDiagram, ParseError> {
    parse_header(text.trim(), 1)
}

/// Parses a labelled system: a header line followed by `label k: <word>`
/// lines for every chord. The generator alphabet is fixed by the diagram's
/// genus.
pub fn parse_labelled(text: &str) -> Result<OrientedLabelled, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty());
    let (header_idx, header) = lines
        .next()
        .ok_or_else(|| ParseError::new(1, 1, "empty input"))?;
    let oriented = parse_header(header, header_idx + 1)?;
    let genus = oriented.diagram.genus();
    let n = oriented.diagram.n();
    let mut labels: Vec<Option<GroupWord>> = vec![None; n];
    for (idx, line) in lines {
        let line_no = idx + 1;
        let rest = line.trim();
        let Some(rest) = rest.strip_prefix("label") else {
            return Err(ParseError::new(
                line_no,
                1,
                "expected `label <index>: <word>`",
            ));
        };
        let Some((index_part, word_part)) = rest.split_once(':') else {
            return Err(ParseError::new(
                line_no,
                1,
                "expected `:` after the chord index",
            ));
        };
        let ci: usize = index_part
            .trim()
            .parse()
            .map_err(|_| ParseError::new(line_no, 1, "expected a chord index after `label`"))?;
        if ci >= n {
            return Err(ParseError::new(
                line_no,
                1,
                format!("chord index {ci} out of range"),
            ));
        }
        let word = GroupWord::parse(word_part, genus)
            .map_err(|e| ParseError::new(line_no, 1, e.to_string()))?;
        if labels[ci].is_some() {
            return Err(ParseError::new(
                line_no,
                1,
                format!("duplicate label for chord {ci}"),
            ));
        }
        labels[ci] = Some(word);
    }
    let labels: Vec<GroupWord> = labels
        .into_iter()
        .enumerate()
        .map(|(ci, l)| {
            l.ok_or_else(|| ParseError::new(1, 1, format!("missing label for chord {ci}")))
        })
        .collect::<Result<_, _>>()?;
    Ok(OrientedLabelled::new(
        LabelledDiagram::new(oriented.diagram.clone(), labels),
        oriented.marker,
        oriented.sign,
    ))
}

pub fn oriented_to_text(o: &OrientedDiagram) -> String {
    format!("{};mark={};sign={:+}", o.diagram, o.marker, o.sign)
}

pub fn labelled_to_text(x: &OrientedLabelled) -> String {
    let genus = x.diagram().genus();
    let mut out = format!("{};mark={};sign={:+}\n", x.diagram(), x.marker, x.sign);
    for ci in 0..x.diagram().n() {
        out.push_str(&format!(
            "label {}: {}\n",
            ci,
            x.labelled.label(ci).display(genus)
        ));
    }
    out
}

/// JSON mirror of the diagram form.
#[derive(Debug, Serialize, Deserialize)]
pub struct DiagramJson {
    pub format: u32,
    pub n: usize,
    pub chords: Vec<[usize; 2]>,
}

pub fn diagram_to_json(d: &ChordDiagram) -> String {
    let doc = DiagramJson {
        format: 1,
        n: d.n(),
        chords: d.chords().into_iter().map(|(a, b)| [a, b]).collect(),
    };
    serde_json::to_string(&doc).expect("serializable")
}

pub fn diagram_from_json(text: &str) -> Result<ChordDiagram, ParseError> {
    let doc: DiagramJson =
        serde_json::from_str(text).map_err(|e| ParseError::new(1, 1, e.to_string()))?;
    let chords: Vec<(usize, usize)> = doc.chords.iter().map(|c| (c[0], c[1])).collect();
    ChordDiagram::new(doc.n, &chords).map_err(|e| ParseError::new(1, 1, e.to_string()))
}

/// Crossing graph in DOT form: one node per chord, one edge per crossing.
pub fn crossing_graph_dot(d: &ChordDiagram) -> String {
    let chords = d.chords();
    let mut out = String::from("graph crossings {\n");
    for (i, (a, b)) in chords.iter().enumerate() {
        out.push_str(&format!("  c{i} [label=\"({a},{b})\"];\n"));
    }
    for i in 0..chords.len() {
        for j in i + 1..chords.len() {
            if d.crosses(i, j) {
                out.push_str(&format!("  c{i} -- c{j};\n"));
            }
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::SurfacePresentation;

    #[test]
    fn diagram_round_trip() {
        let d = ChordDiagram::new(3, &[(0, 3), (1, 4), (2, 5)]).unwrap();
        assert_eq!(parse_diagram(&d.to_string()).unwrap(), d);
        assert_eq!(diagram_from_json(&diagram_to_json(&d)).unwrap(), d);
        // whitespace-insensitive
        let spaced = "n = 3 ; chords = ( 0 , 3 ) (1,4) ( 2 ,5 )";
        assert_eq!(parse_diagram(spaced).unwrap(), d);
    }

    #[test]
    fn diagnostics_carry_position() {
        let err = parse_diagram("n=2;chords=(0,1)(2,3)").unwrap_err();
        assert!(err.msg.contains("adjacent pairing at point 0"), "{err}");
        let err = parse_diagram("n=2;chords=").unwrap_err();
        assert!(err.msg.contains("unmatched"), "{err}");
        let err = parse_diagram("chords=(0,2)(1,3)").unwrap_err();
        assert_eq!((err.line, err.col), (1, 1));
    }

    #[test]
    fn labelled_round_trip() {
        let pres = SurfacePresentation::new(2);
        let phi = OrientedLabelled::plus(LabelledDiagram::generator(2));
        let text = labelled_to_text(&phi);
        let back = parse_labelled(&text).unwrap();
        assert_eq!(back.equiv_coeff(&phi, &pres), Some(1));
        // label lines may arrive out of order
        let d = "n=2;chords=(0,2)(1,3)\nlabel 1: y\nlabel 0: x\n";
        let l = parse_labelled(d).unwrap();
        assert_eq!(l.labelled.label(0), &GroupWord::generator(1));
    }

    #[test]
    fn labelled_errors() {
        let missing = "n=2;chords=(0,2)(1,3)\nlabel 0: x\n";
        assert!(parse_labelled(missing)
            .unwrap_err()
            .msg
            .contains("missing label"));
        let bad_word = "n=2;chords=(0,2)(1,3)\nlabel 0: q\nlabel 1: y\n";
        let err = parse_labelled(bad_word).unwrap_err();
        assert_eq!(err.line, 2);
    }

    #[test]
    fn oriented_fields() {
        let o = parse_oriented("n=2;chords=(0,2)(1,3);mark=3;sign=-1").unwrap();
        assert_eq!(o.marker, 3);
        assert_eq!(o.sign, -1);
        let round = parse_oriented(&oriented_to_text(&o)).unwrap();
        assert_eq!(round, o);
    }

    #[test]
    fn dot_export_lists_crossings() {
        let d = ChordDiagram::new(2, &[(0, 2), (1, 3)]).unwrap();
        let dot = crossing_graph_dot(&d);
        assert!(dot.contains("c0 -- c1"));
    }
}
