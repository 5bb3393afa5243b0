use std::collections::BTreeSet;

use super::*;

pub(super) fn check(cx: &Ctx<'_>) -> Vec<Finding> {
    let m = cx.model;
    let mut out = Out::new();

    // Data elements touched by some data association.
    let used: BTreeSet<DataId> = m.data_associations().iter().flat_map(|a| a.items.iter().copied()).collect();
    let object_of = |d: DataId| match m.data_element(d).kind {
        DataKind::DataObjectReference { object } => object,
        _ => Some(d),
    };

    // DF-01
    for assoc in m.data_associations() {
        let p = m.root_process(m.node(assoc.owner).container);
        if cx.graph.callers(p).is_empty() {
            continue;
        }
        for &item in &assoc.items {
            let Some(target) = object_of(item) else { continue };
            let Some(c) = m.data_element(target).container else { continue };
            if m.root_process(c) != p {
                let de = m.data_element(target);
                out.push(
                    "DF-01",
                    &assoc.id,
                    format!("called process uses {} from another process", describe(de.name.as_deref(), &de.id)),
                );
            }
        }
    }

    for d in m.data_ids() {
        let de = m.data_element(d);
        match de.kind {
            // DF-02
            DataKind::DataObject => {
                let connected = used.contains(&d)
                    || m.data_ids().any(|r| {
                        used.contains(&r)
                            && matches!(m.data_element(r).kind, DataKind::DataObjectReference { object: Some(o) } if o == d)
                    });
                if !connected {
                    out.push("DF-02", &de.id, "data object has no data association");
                }
            }
            // DF-03
            DataKind::DataStore => {
                let connected = used.contains(&d)
                    || m.data_ids()
                        .any(|r| matches!(m.data_element(r).kind, DataKind::DataStoreReference { store: Some(s) } if s == d));
                if !connected {
                    out.push("DF-03", &de.id, "data store is neither referenced nor associated");
                }
            }
            // DF-04
            DataKind::DataObjectReference { object: Some(o) } => {
                let (Some(here), Some(there)) = (de.container, m.data_element(o).container) else {
                    continue;
                };
                if !m.container_chain(here).contains(&there) {
                    out.push(
                        "DF-04",
                        &de.id,
                        format!("references a data object of {}, outside its scope", cx.container_label(there)),
                    );
                }
            }
            _ => {}
        }
    }
    out.done()
}
