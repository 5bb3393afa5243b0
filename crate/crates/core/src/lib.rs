//! BPMN 2.0 model loading and well-formedness checking.
//!
//! ```
//! use bpmnlint_core::{engine, xmlio};
//!
//! let xml = br#"<definitions xmlns="http://www.omg.org/spec/BPMN/20100524/MODEL" id="d">
//!   <process id="p" name="Order">
//!     <startEvent id="s" name="Order received"/>
//!     <task id="t" name="Ship"/>
//!     <endEvent id="e" name="Order shipped"/>
//!     <sequenceFlow id="f1" sourceRef="s" targetRef="t"/>
//!     <sequenceFlow id="f2" sourceRef="t" targetRef="e"/>
//!   </process>
//! </definitions>"#;
//! let model = xmlio::parse_bpmn(xml, "order.bpmn").unwrap();
//! let report = engine::run(&model, &engine::LintConfig::strict()).unwrap();
//! assert!(report.diagnostics.is_empty());
//! ```

pub mod engine;
pub mod graph;
pub mod model;
pub mod rules;
pub mod xmlio;

pub use engine::{Diagnostic, LintConfig, LintReport, Severity};
pub use model::{BpmnModel, ElementRef};
pub use rules::{Category, RuleDescriptor};
