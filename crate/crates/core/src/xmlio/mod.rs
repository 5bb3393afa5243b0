//! Reading BPMN 2.0 XML, and a programmatic builder for test fixtures.
//!
//! Both front ends produce the same neutral element tree ([`RawElement`]),
//! which [`link`] turns into a [`BpmnModel`]. Structural problems found
//! while linking are kept on the model, not raised as errors.

mod builder;
mod link;
mod parse;

pub use builder::{BuildError, ModelBuilder, NodeSpec, TriggerSpec};
pub use parse::{parse_bpmn, parse_file, ParseIssue, BPMN_MODEL_NS};

use crate::model::BpmnModel;

/// One element of the BPMN model namespace, with namespace prefixes
/// stripped. Elements of other namespaces never appear here.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub(crate) struct RawElement {
    pub tag: String,
    pub attrs: Vec<(String, String)>,
    pub children: Vec<RawElement>,
    pub text: String,
    pub line: u32,
    pub column: u32,
}

impl RawElement {
    pub fn new(tag: &str) -> Self {
        RawElement {
            tag: tag.to_string(),
            ..Default::default()
        }
    }

    pub fn attr(&self, key: &str) -> Option<&str> {
        self.attrs
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    pub fn set_attr(&mut self, key: &str, value: &str) {
        match self.attrs.iter_mut().find(|(k, _)| k == key) {
            Some(slot) => slot.1 = value.to_string(),
            None => self.attrs.push((key.to_string(), value.to_string())),
        }
    }

    pub fn with_attr(mut self, key: &str, value: &str) -> Self {
        self.set_attr(key, value);
        self
    }

    pub fn children_named<'a>(&'a self, tag: &'a str) -> impl Iterator<Item = &'a RawElement> {
        self.children.iter().filter(move |c| c.tag == tag)
    }
}

pub(crate) fn link(root: &RawElement, source_name: &str) -> BpmnModel {
    link::Linker::new(source_name).run(root)
}
