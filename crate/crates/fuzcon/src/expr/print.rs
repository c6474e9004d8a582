//! Canonical printer: renders an expression tree back into DSL source.
//!
//! The output reparses to the same tree, which is what the catalog export
//! relies on.

use super::{Axis, BinOp, Branch, Node};
use std::fmt::Write;

// binding strength, used to decide where parentheses are required
fn level(node: &Node) -> u8 {
    match node {
        Node::Bin(BinOp::Add | BinOp::Sub, ..) => 1,
        Node::Bin(BinOp::Mul | BinOp::Div, ..) => 2,
        // `p/q` re-lexes as a division, so it binds like one
        Node::Const(r) if r.den != 1 => 2,
        Node::Neg(_) => 3,
        _ => 4,
    }
}

pub(super) fn print(node: &Node) -> String {
    let mut out = String::new();
    write_node(&mut out, node);
    out
}

fn write_node(out: &mut String, node: &Node) {
    match node {
        Node::Var(Axis::X) => out.push('x'),
        Node::Var(Axis::Y) => out.push('y'),
        Node::Const(r) => {
            let _ = write!(out, "{r}");
        }
        Node::Neg(a) => {
            out.push('-');
            write_child(out, a, 3, false);
        }
        Node::Bin(op, a, b) => {
            let (sym, lvl) = match op {
                BinOp::Add => (" + ", 1),
                BinOp::Sub => (" - ", 1),
                BinOp::Mul => ("*", 2),
                BinOp::Div => ("/", 2),
            };
            write_child(out, a, lvl, false);
            out.push_str(sym);
            // the grammar is left-associative: a same-level right child needs
            // parentheses to reparse into the same tree
            write_child(out, b, lvl, true);
        }
        Node::Min(a, b) | Node::Max(a, b) => {
            out.push_str(if matches!(node, Node::Min(..)) {
                "min("
            } else {
                "max("
            });
            write_node(out, a);
            out.push_str(", ");
            write_node(out, b);
            out.push(')');
        }
        Node::Sqrt(a) => {
            out.push_str("sqrt(");
            write_node(out, a);
            out.push(')');
        }
        Node::Pow(a, r) => {
            let _ = write!(out, "pow(");
            write_node(out, a);
            let _ = write!(out, ", {r})");
        }
        Node::Piecewise(branches, otherwise) => {
            out.push_str("piece(");
            for (i, Branch { guard, value }) in branches.iter().enumerate() {
                if i > 0 {
                    out.push_str(" ; ");
                }
                for (j, cmp) in guard.iter().enumerate() {
                    if j > 0 {
                        out.push_str(" && ");
                    }
                    write_node(out, &cmp.lhs);
                    let _ = write!(out, " {} ", cmp.op.symbol());
                    write_node(out, &cmp.rhs);
                }
                out.push_str(" : ");
                write_node(out, value);
            }
            if let Some(catch_all) = otherwise {
                if !branches.is_empty() {
                    out.push_str(" ; ");
                }
                out.push_str("else : ");
                write_node(out, catch_all);
            }
            out.push(')');
        }
    }
}

fn write_child(out: &mut String, child: &Node, parent_level: u8, strict: bool) {
    let needs_parens = if strict {
        level(child) <= parent_level
    } else {
        level(child) < parent_level
    };
    if needs_parens {
        out.push('(');
        write_node(out, child);
        out.push(')');
    } else {
        write_node(out, child);
    }
}
