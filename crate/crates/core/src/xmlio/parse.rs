use std::path::Path;

use super::RawElement;
use crate::model::BpmnModel;

pub const BPMN_MODEL_NS: &str = "http://www.omg.org/spec/BPMN/20100524/MODEL";

/// A problem reading the document. Fatal issues prevent a model from being
/// built; non-fatal ones end up as info findings on the model.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{line}:{column}: {message}")]
pub struct ParseIssue {
    pub line: u32,
    pub column: u32,
    pub message: String,
    pub fatal: bool,
}

impl ParseIssue {
    fn fatal(line: u32, column: u32, message: impl Into<String>) -> Self {
        ParseIssue {
            line,
            column,
            message: message.into(),
            fatal: true,
        }
    }
}

pub fn parse_bpmn(bytes: &[u8], source_name: &str) -> Result<BpmnModel, ParseIssue> {
    let raw = read_tree(bytes)?;
    Ok(super::link(&raw, source_name))
}

pub fn parse_file(path: &Path) -> Result<BpmnModel, ParseIssue> {
    let bytes = std::fs::read(path)
        .map_err(|e| ParseIssue::fatal(0, 0, format!("cannot read {}: {e}", path.display())))?;
    parse_bpmn(&bytes, &path.display().to_string())
}

pub(crate) fn read_tree(bytes: &[u8]) -> Result<RawElement, ParseIssue> {
    let text = std::str::from_utf8(bytes).map_err(|e| {
        ParseIssue::fatal(0, 0, format!("input is not UTF-8 (byte {})", e.valid_up_to()))
    })?;
    let text = text.strip_prefix('\u{feff}').unwrap_or(text);
    let opts = roxmltree::ParsingOptions {
        allow_dtd: true,
        ..Default::default()
    };
    let doc = roxmltree::Document::parse_with_options(text, opts).map_err(|e| {
        let pos = e.pos();
        ParseIssue::fatal(pos.row, pos.col, e.to_string())
    })?;
    let root = doc.root_element();
    if root.tag_name().namespace() != Some(BPMN_MODEL_NS) || root.tag_name().name() != "definitions" {
        let pos = doc.text_pos_at(root.range().start);
        return Err(ParseIssue::fatal(
            pos.row,
            pos.col,
            format!(
                "root element must be `definitions` in namespace {BPMN_MODEL_NS}, found `{}`",
                root.tag_name().name()
            ),
        ));
    }
    Ok(convert(&doc, root))
}

fn convert(doc: &roxmltree::Document<'_>, node: roxmltree::Node<'_, '_>) -> RawElement {
    let pos = doc.text_pos_at(node.range().start);
    let mut el = RawElement {
        tag: node.tag_name().name().to_string(),
        line: pos.row,
        column: pos.col,
        ..Default::default()
    };
    for a in node.attributes() {
        // BPMN attributes are unqualified; qualified ones belong to
        // extensions (xsi:type being the one exception worth keeping).
        match a.namespace() {
            None => el.attrs.push((a.name().to_string(), a.value().to_string())),
            Some("http://www.w3.org/2001/XMLSchema-instance") if a.name() == "type" => {
                el.attrs.push(("xsi:type".to_string(), a.value().to_string()))
            }
            Some(_) => {}
        }
    }
    for child in node.children() {
        if child.is_text() {
            el.text.push_str(child.text().unwrap_or_default());
        } else if child.is_element() && child.tag_name().namespace() == Some(BPMN_MODEL_NS) {
            el.children.push(convert(doc, child));
        }
    }
    el
}
