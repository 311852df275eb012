//! `(J c1 c2 …)` / `(U c1 c2 …)` / decimal leaf ids.

use super::{CotreeError, Label, Node};

pub(super) fn emit(node: &Node) -> String {
    let mut out = String::new();
    write(node, &mut out);
    out
}

fn write(node: &Node, out: &mut String) {
    match node {
        Node::Leaf(v) => out.push_str(&v.to_string()),
        Node::Internal { label, children } => {
            out.push('(');
            out.push(label.symbol());
            for c in children {
                out.push(' ');
                write(c, out);
            }
            out.push(')');
        }
    }
}

struct Parser<'a> {
    text: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, reason: &'static str) -> CotreeError {
        CotreeError::Parse {
            offset: self.pos,
            reason,
        }
    }

    fn skip_ws(&mut self) {
        while self.text.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn node(&mut self) -> Result<Node, CotreeError> {
        self.skip_ws();
        match self.text.get(self.pos) {
            Some(b'(') => {
                self.pos += 1;
                let label = match self.text.get(self.pos) {
                    Some(b'J') => Label::Join,
                    Some(b'U') => Label::Union,
                    _ => return Err(self.err("expected J or U")),
                };
                self.pos += 1;
                let mut children = Vec::new();
                loop {
                    let before = self.pos;
                    self.skip_ws();
                    match self.text.get(self.pos) {
                        Some(b')') => {
                            self.pos += 1;
                            return Ok(Node::Internal { label, children });
                        }
                        None => return Err(self.err("unclosed parenthesis")),
                        _ if before == self.pos => return Err(self.err("expected whitespace")),
                        _ => children.push(self.node()?),
                    }
                }
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.text.get(self.pos).is_some_and(u8::is_ascii_digit) {
                    self.pos += 1;
                }
                std::str::from_utf8(&self.text[start..self.pos])
                    .expect("ascii digits")
                    .parse()
                    .map(Node::Leaf)
                    .map_err(|_| CotreeError::Parse {
                        offset: start,
                        reason: "leaf id out of range",
                    })
            }
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

pub(super) fn parse(text: &str) -> Result<Node, CotreeError> {
    let mut p = Parser {
        text: text.as_bytes(),
        pos: 0,
    };
    let node = p.node()?;
    p.skip_ws();
    if p.pos != p.text.len() {
        return Err(p.err("trailing input"));
    }
    Ok(node)
}
