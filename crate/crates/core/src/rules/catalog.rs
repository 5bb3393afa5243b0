//! Descriptor text for every rule: id, title, summary, and two miniature
//! examples used by `explain`.

pub(super) const ENTRIES: &[(&str, &str, &str, &str, &str)] = &[
    ("FC-01", "At most one implicit process per collaboration",
     "Within a collaboration, at most one process may appear without a pool. Processes bound to a participant or reached through a call activity are not counted.",
     "two processes, one of them bound to a pool",
     "two processes, neither bound to a pool"),
    ("FC-02", "Abstract process consistent with its detailed process",
     "When configuration declares process B an abstraction of process A, B has no more flow nodes, sequence flows, incoming or outgoing message flows than A, and no fewer sub-processes.",
     "public process with fewer nodes and the same message flows as its private process",
     "public process with an extra incoming message flow"),
    ("FC-03", "Public processes are not executable",
     "A process whose processType is Public must not be marked isExecutable.",
     "public process with isExecutable=false",
     "public process with isExecutable=true"),
    ("FC-04", "Top-level start events use allowed triggers",
     "Start events directly inside a process may only be None, Message, Timer, Conditional, Signal, Multiple or Parallel Multiple.",
     "top-level process started by a timer",
     "top-level process started by an escalation"),
    ("FC-05", "Called processes start with a none start event",
     "A process invoked by a call activity must contain a None start event.",
     "call activity targeting a process that has a None start event",
     "call activity targeting a process that only has a Message start event"),
    ("FC-06", "Sub-process message flows consistent with its contents",
     "Message flows drawn on a sub-process and message flows drawn on the nodes inside it must connect the same partners in the same directions.",
     "sub-process and its inner task both exchange messages with pool P",
     "inner task talks to pool Q while the sub-process border talks to pool P"),
    ("FC-07", "Embedded sub-process has at most one none start event",
     "A sub-process that is not an event sub-process has no more than one start event, and that start event has no trigger.",
     "sub-process with a single None start event",
     "sub-process with a Message start event"),
    ("FC-08", "Event sub-process has exactly one typed start event",
     "An event sub-process has exactly one start event; it must carry a trigger allowed for event sub-process starts.",
     "event sub-process started by an error catch",
     "event sub-process with an untyped start event"),
    ("FC-09", "Event sub-process has no sequence flows",
     "An event sub-process is triggered by its start event and never connected by sequence flows.",
     "free-standing event sub-process",
     "event sub-process reached by a sequence flow"),
    ("FC-10", "Flow nodes are connected",
     "In a container that uses start and end events, every flow node has at least one incoming or outgoing sequence flow. Compensation handlers, event sub-processes and ad-hoc contents are exempt.",
     "every task sits on a path from start to end",
     "a task with no sequence flows at all"),
    ("FC-11", "Flow nodes have incoming and outgoing flows where required",
     "Nodes other than start events, boundary events and catch links need an incoming sequence flow; nodes other than end events and throw links need an outgoing one.",
     "task with one incoming and one outgoing flow",
     "gateway with no outgoing flow"),
    ("FC-12", "Event trigger allowed for the event's position",
     "Each event position (event sub-process start, boundary, intermediate catch, intermediate throw, end) admits only certain triggers.",
     "message end event",
     "timer end event"),
    ("FC-13", "Start events have no incoming sequence flow",
     "A start event begins a path and cannot be the target of a sequence flow.",
     "start event with outgoing flow only",
     "start event targeted by a sequence flow"),
    ("FC-14", "End events have no outgoing sequence flow",
     "An end event terminates a path and cannot be the source of a sequence flow.",
     "end event with incoming flow only",
     "end event with an outgoing sequence flow"),
    ("FC-15", "Catch events receiving messages are message or multiple",
     "A catching event that is the target of a message flow must have a Message or Multiple trigger.",
     "message intermediate catch receiving a message flow",
     "timer intermediate catch receiving a message flow"),
    ("FC-16", "Catch events with several incoming message flows are multiple",
     "A catching event targeted by more than one message flow must have a Multiple trigger.",
     "multiple catch event receiving two message flows",
     "message catch event receiving two message flows"),
    ("FC-17", "Catch events send no message flows",
     "A catching event cannot be the source of a message flow.",
     "message catch event with an incoming message flow",
     "message catch event with an outgoing message flow"),
    ("FC-18", "Throw events sending messages are message or multiple",
     "A throwing event that is the source of a message flow must have a Message or Multiple trigger.",
     "message end event sending a message flow",
     "signal end event sending a message flow"),
    ("FC-19", "Throw events with several outgoing message flows are multiple",
     "A throwing event with more than one outgoing message flow must have a Multiple trigger.",
     "multiple throw event sending two message flows",
     "message throw event sending two message flows"),
    ("FC-20", "Throw events receive no message flows",
     "A throwing event cannot be the target of a message flow.",
     "message throw event sending a message flow",
     "message throw event receiving a message flow"),
    ("FC-21", "Link events have flows only on their linked side",
     "A throwing link event has incoming but no outgoing sequence flow; a catching link event has outgoing but no incoming sequence flow.",
     "throw link ending a path, catch link starting one",
     "catch link with an incoming sequence flow"),
    ("FC-22", "One catch link per name in a container",
     "Several throw links may share a name, but only one catch link with that name may exist in the same container.",
     "two throw links and one catch link named L",
     "two catch links named L"),
    ("FC-23", "Link events are named",
     "Link events are paired by name, so both sides need one.",
     "throw and catch links named L",
     "unnamed throw link"),
    ("FC-24", "Throw and catch link names match within a container",
     "Every throw link has a catch link of the same name in its container, and vice versa.",
     "throw L and catch L in one process",
     "throw A with only catch B available"),
    ("FC-25", "Intermediate events have incoming and outgoing flows",
     "Intermediate events in normal flow need both an incoming and an outgoing sequence flow; link events need only their linked side.",
     "timer catch between two tasks",
     "timer catch without an incoming flow"),
    ("FC-26", "No explicit start event when nodes lack incoming flows",
     "If some activity or gateway has no incoming sequence flow, it acts as an implicit start and the container must not also use explicit start events.",
     "every activity has an incoming flow from the start event",
     "a start event next to a task with no incoming flow"),
    ("FC-27", "Explicit start/end events imply no implicit ones",
     "If a container has a start event, every activity and gateway has an incoming flow; if it has an end event, every activity and gateway has an outgoing flow.",
     "all tasks connected between start and end",
     "a task without an outgoing flow in a process that has an end event"),
    ("FC-28", "Start and end events come in pairs",
     "A container that uses a start event must also use an end event, and vice versa.",
     "process with both a start and an end event",
     "process with a start event and no end event"),
    ("FC-29", "Non-interrupting start events only in event sub-processes",
     "Only start events of event sub-processes may be non-interrupting.",
     "non-interrupting message start inside an event sub-process",
     "non-interrupting message start inside an embedded sub-process"),
    ("FC-30", "Error catch events are boundary events",
     "Errors are caught by boundary events or event sub-process starts, never by intermediate catch events in normal flow.",
     "error boundary event on a sub-process",
     "error intermediate catch event in a sequence"),
    ("FC-31", "Error boundary events start an exception flow",
     "An error boundary event must have an outgoing sequence flow.",
     "error boundary event leading to a handler task",
     "error boundary event with no outgoing flow"),
    ("FC-32", "Error throws are caught by a matching catch",
     "Each error end event needs an enclosing catch: an unnamed error catch or one with the same error name on an enclosing activity or event sub-process.",
     "error end E1 inside a sub-process with an E1 boundary catch",
     "error end E2 inside a sub-process with only an E1 boundary catch"),
    ("FC-33", "Named error catches have a matching throw",
     "A named error catch must be reachable by an error throw of the same name from inside its scope.",
     "boundary catch E1 on a sub-process containing an E1 end event",
     "boundary catch E1 on a sub-process that only throws E2"),
    ("FC-34", "Named and unnamed error catches are not mixed",
     "An activity's error boundary events are either all named or all unnamed.",
     "two named error catches on one activity",
     "one named and one unnamed error catch on one activity"),
    ("FC-35", "Error throw events are end events",
     "Errors can only be thrown by end events.",
     "error end event",
     "error intermediate throw event"),
    ("FC-36", "Escalation catch events are boundary events",
     "Escalations are caught by boundary events or event sub-process starts, never by intermediate catch events in normal flow.",
     "escalation boundary event on a sub-process",
     "escalation intermediate catch event in a sequence"),
    ("FC-37", "Escalation boundary events start an exception flow",
     "An escalation boundary event must have an outgoing sequence flow.",
     "escalation boundary event leading to a task",
     "escalation boundary event with no outgoing flow"),
    ("FC-38", "Escalation throws are caught by a matching catch",
     "Each escalation throw needs an enclosing unnamed catch or one with the same escalation name.",
     "escalation end X inside a sub-process with an X boundary catch",
     "escalation end Y inside a sub-process with only an X boundary catch"),
    ("FC-39", "Named and unnamed interrupting escalation catches are not mixed",
     "An activity's interrupting escalation boundary events are either all named or all unnamed.",
     "two named interrupting escalation catches",
     "one named and one unnamed interrupting escalation catch"),
    ("FC-40", "Named and unnamed non-interrupting escalation catches are not mixed",
     "An activity's non-interrupting escalation boundary events are either all named or all unnamed.",
     "two named non-interrupting escalation catches",
     "one named and one unnamed non-interrupting escalation catch"),
    ("FC-41", "Escalation end events are caught by interrupting catches",
     "An escalation thrown by an end event ends its scope, so it must be caught by an interrupting catch.",
     "escalation end caught by an interrupting boundary event",
     "escalation end caught only by a non-interrupting boundary event"),
    ("FC-42", "Intermediate escalation throws are caught by non-interrupting catches",
     "An escalation thrown mid-flow lets the scope continue, so it must be caught by a non-interrupting catch.",
     "intermediate escalation caught by a non-interrupting boundary event",
     "intermediate escalation caught only by an interrupting boundary event"),
    ("FC-43", "Named escalation catches have a matching throw",
     "A named escalation catch must be reachable by an escalation throw of the same name from inside its scope.",
     "boundary catch X on a sub-process that throws X",
     "boundary catch X on a sub-process that throws nothing"),
    ("FC-44", "Signal throws are caught",
     "Each signal throw needs a catch somewhere in the model: an unnamed signal catch or one with the same signal name.",
     "signal S1 thrown in one pool and caught in another",
     "signal S2 thrown and never caught"),
    ("FC-45", "Named signal catches have a matching throw",
     "A named signal catch needs a throw of the same signal somewhere in the model.",
     "catch S1 with a throw S1 in another pool",
     "catch S3 with no S3 throw anywhere"),
    ("FC-46", "Only cancel boundary events on transactions, and only there",
     "Boundary events attached to a transaction must be Cancel events, and Cancel boundary events may only be attached to transactions.",
     "cancel boundary event on a transaction",
     "message boundary event on a transaction"),
    ("FC-47", "Cancel boundary and cancel end events come together in transactions",
     "A transaction with a cancel boundary event contains a cancel end event, and cancel end events appear only inside transactions.",
     "transaction with a cancel end event and a cancel boundary event",
     "transaction with a cancel boundary event but no cancel end event"),
    ("FC-48", "Transactions with several end events have a terminate end",
     "A transaction with more than one end event must include a terminate end event.",
     "transaction with a none end and a terminate end",
     "transaction with two none end events"),
    ("FC-49", "No compensation throw events inside transactions",
     "Compensation is triggered by cancelling the transaction, not by explicit compensation throws inside it.",
     "compensation throw outside any transaction",
     "compensation end event directly inside a transaction"),
    ("FC-50", "Compensation activities have a trigger",
     "An activity marked for compensation is associated with a compensation boundary event, or lives in an event sub-process started by a compensation event.",
     "compensation task associated with a compensation boundary event",
     "compensation task not associated with anything"),
    ("FC-51", "Compensation throws name a compensable activity",
     "A compensation throw that names an activity must refer to an activity in scope that has a compensation handler.",
     "throw compensating Book, where Book has a compensation boundary",
     "throw compensating Activity3, which does not exist"),
    ("FC-52", "Interrupting exception flows merge through exclusive gateways",
     "When the flow leaving an interrupting boundary event rejoins normal flow, it must do so at an exclusive gateway.",
     "timer exception path merging at an exclusive gateway",
     "timer exception path merging at an inclusive gateway"),
    ("FC-53", "Non-interrupting exception flows merge through inclusive gateways",
     "When the flow leaving a non-interrupting boundary event rejoins normal flow, it must do so at an inclusive gateway.",
     "non-interrupting timer path merging at an inclusive gateway",
     "non-interrupting timer path merging at an exclusive gateway"),
    ("FC-54", "No conditions on flows leaving events",
     "Sequence flows whose source is an event cannot carry condition expressions.",
     "unconditional flow out of a boundary event",
     "conditional flow out of a boundary event"),
    ("FC-55", "Boundary events have exactly one outgoing flow",
     "Every boundary event except a compensation boundary event has exactly one outgoing sequence flow.",
     "timer boundary event with one outgoing flow",
     "timer boundary event with no outgoing flow"),
    ("FC-56", "Boundary events have no incoming flow",
     "Boundary events are triggered by their activity and cannot be targeted by sequence flows.",
     "boundary event with outgoing flow only",
     "boundary event targeted by a sequence flow"),
    ("FC-57", "Intermediate events have the flows their trigger requires",
     "Intermediate events with None, Message, Timer, Escalation, Compensation, Conditional, Signal or Multiple triggers need incoming and outgoing sequence flows; Cancel and Error intermediates must have no incoming flow.",
     "message intermediate catch between two tasks",
     "signal intermediate throw without an outgoing flow"),
    ("FC-58", "Parallel joins receive only concurrent flows",
     "Every pair of incoming flows of a parallel join must be able to carry tokens at the same time; otherwise the join waits forever.",
     "parallel split followed by a parallel join",
     "exclusive split followed by a parallel join"),
    ("FC-59", "Exclusive joins receive only alternative flows",
     "No two incoming flows of an exclusive join may carry tokens at the same time; otherwise the downstream path runs more than once.",
     "exclusive split followed by an exclusive join",
     "parallel split followed by an exclusive join"),
    ("FC-60", "Exclusive splits are all conditions or all events",
     "The outgoing branches of a splitting exclusive gateway are either all conditional (one default allowed), or all lead straight to catch events, or all lead straight to receive tasks.",
     "exclusive split with two conditional branches",
     "exclusive split with one conditional and one plain branch"),
    ("FC-61", "Gateways have several incoming or several outgoing flows",
     "A gateway with at most one incoming and at most one outgoing flow controls nothing.",
     "gateway splitting into two branches",
     "gateway with one incoming and one outgoing flow"),
    ("FC-62", "Converging gateways have several incoming and at most one outgoing",
     "A gateway declared Converging has more than one incoming flow and no more than one outgoing flow.",
     "converging gateway with two incoming flows",
     "converging gateway with a single incoming flow"),
    ("FC-63", "Diverging gateways have several outgoing and at most one incoming",
     "A gateway declared Diverging has more than one outgoing flow and no more than one incoming flow.",
     "diverging gateway with two outgoing flows",
     "diverging gateway with two incoming flows"),
    ("FC-64", "Event-based gateways have two or more outgoing flows",
     "An event-based gateway chooses among events, so it needs at least two outgoing flows.",
     "event-based gateway with message and timer branches",
     "event-based gateway with a single branch"),
    ("FC-65", "No conditions after event-based gateways",
     "Branches of an event-based gateway are chosen by events, not conditions.",
     "plain flows out of an event-based gateway",
     "conditional flow out of an event-based gateway"),
    ("FC-66", "Conditions on exclusive and inclusive gateway branches",
     "When an exclusive or inclusive gateway splits, every outgoing flow except the default carries a condition.",
     "exclusive split with conditional branches and a default",
     "exclusive split with an unconditional non-default branch"),
    ("FC-67", "Event-based gateway targets are receive tasks or catch events",
     "Each branch of an event-based gateway leads to a receive task or to a Message, Timer, Signal, Conditional or Multiple intermediate catch event.",
     "event-based gateway leading to a message catch and a timer catch",
     "event-based gateway leading to a user task"),
    ("FC-68", "Receive tasks after event-based gateways have no boundary events",
     "A receive task used as an event-based gateway target cannot have boundary events attached.",
     "plain receive task after an event-based gateway",
     "receive task with a timer boundary after an event-based gateway"),
    ("FC-69", "Event-based gateways don't mix message catches and receive tasks",
     "The targets of one event-based gateway use either message catch events or receive tasks, not both.",
     "event-based gateway with two receive tasks",
     "event-based gateway with a message catch and a receive task"),
    ("FC-70", "Event-based gateway targets have a single incoming flow",
     "A target of an event-based gateway has no incoming flow other than the one from the gateway.",
     "each target reached only from the gateway",
     "a target also reached from another task"),
    ("FC-71", "No conditions after parallel or complex gateways",
     "Flows leaving a parallel or complex gateway cannot carry condition expressions.",
     "plain flows out of a parallel split",
     "conditional flow out of a parallel split"),
    ("FC-72", "Conditional activity outflows are real alternatives",
     "An activity with conditional outgoing flows has at least two outgoing flows, and a default flow never sits next to another unconditional flow.",
     "task with a conditional flow and a default flow",
     "task with a default flow and an unconditional flow"),
    ("FC-73", "Compensation activities have no sequence flows",
     "A compensation activity is reached through one association only and has no incoming or outgoing sequence flow.",
     "compensation task linked by one association",
     "compensation task with an outgoing sequence flow"),
    ("FC-74", "Compensation activity lives in the compensated activity's process",
     "The compensation handler belongs to the same process as the activity it compensates.",
     "handler next to the compensated task",
     "handler in another pool's process"),
    ("FC-75", "Receive tasks send no messages",
     "A receive task cannot be the source of a message flow.",
     "receive task with an incoming message flow",
     "receive task with an outgoing message flow"),
    ("FC-76", "Send tasks receive no messages",
     "A send task cannot be the target of a message flow.",
     "send task with an outgoing message flow",
     "send task with an incoming message flow"),
    ("FC-77", "Script and manual tasks exchange no messages",
     "Script and manual tasks are neither the source nor the target of message flows.",
     "user task exchanging messages",
     "manual task receiving a message flow"),
    ("FC-78", "A sole outgoing sequence flow is unconditional",
     "A condition is meaningless on the only flow leaving a node.",
     "task with one plain outgoing flow",
     "task whose only outgoing flow is conditional"),
    ("FC-79", "Sequence flows stay inside their container",
     "Both ends of a sequence flow live in the same container; a boundary event counts as living where its activity lives.",
     "boundary event flow into the surrounding process",
     "flow from a task inside a sub-process to a task outside it"),
    ("FC-80", "Sequence flows are not self-loops",
     "The source and target of a sequence flow differ.",
     "flow between two tasks",
     "flow from a task to itself"),
    ("FC-81", "Message flow sources are allowed senders",
     "Message flows start at a Message or Multiple throw event, a send, user or service task, a sub-process or call activity, or a black-box pool.",
     "message flow from a send task",
     "message flow from a script task"),
    ("FC-82", "Message flow targets are allowed receivers",
     "Message flows end at a Message or Multiple catch event (start, intermediate or boundary), a receive, user or service task, a sub-process or call activity, or a black-box pool.",
     "message flow into a receive task",
     "message flow into a manual task"),
    ("FC-83", "Message flows don't end on white-box pools",
     "A pool that shows its process connects messages through the nodes inside it, not through its border.",
     "message flow to a black-box pool",
     "message flow to the border of a pool with a process"),
    ("FC-84", "Messages are used",
     "Every message definition is referenced by a message flow, a send or receive task, or a message event definition.",
     "message referenced by a message flow",
     "message definition referenced by nothing"),
    ("FC-85", "Associations don't connect two text annotations",
     "An association linking a text annotation to another text annotation annotates nothing.",
     "annotation associated with a task",
     "annotation associated with another annotation"),
    ("DF-01", "Called processes use only their own data",
     "Data associations inside a process that is called by a call activity reference only data objects of that process.",
     "called process reading its own data object",
     "called process reading a data object of its caller's process"),
    ("DF-02", "Data objects are connected",
     "A data object is read or written by at least one data association, directly or through one of its references.",
     "data object written by a task",
     "data object with no data association"),
    ("DF-03", "Data stores are connected",
     "A data store is referenced by a data store reference or used by a data association.",
     "data store referenced from a process",
     "data store used by nothing"),
    ("DF-04", "Data object references stay in scope",
     "A data object reference points to a data object in the same container or an enclosing one.",
     "reference to a data object of the parent process",
     "reference to a data object inside a sibling sub-process"),
    ("BP-01", "Keep containers to at most nine flow nodes",
     "A process or sub-process with more than nine flow nodes is hard to read; consider sub-processes.",
     "process with seven flow nodes",
     "process with twelve flow nodes"),
    ("BP-02", "Use either send/receive tasks or message events",
     "Within one container, model message exchange with send/receive tasks or with message intermediate events, not both.",
     "container using only send and receive tasks",
     "container using a send task and a message catch event"),
    ("BP-03", "Use explicit start and end events",
     "Containers with flow nodes should mark where they start and end with explicit events.",
     "process with a start and an end event",
     "process of two tasks with no events"),
    ("BP-04", "Use a single start event",
     "A container should have no more than one start event.",
     "process with one start event",
     "process with two start events"),
    ("BP-05", "Add a default flow next to conditional flows",
     "A node with conditional outgoing flows should also have a default flow so it cannot get stuck.",
     "task with a conditional flow and a default",
     "task with two conditional flows and no default"),
    ("BP-06", "Give event-based gateways a timer branch",
     "An event-based gateway should include a timer catch among its targets so it cannot wait forever.",
     "event-based gateway with message and timer branches",
     "event-based gateway with two message branches"),
    ("BP-07", "Events have at most one outgoing flow",
     "Events other than end events should not split; put a gateway or activity after them.",
     "catch event followed by a parallel gateway",
     "catch event with two outgoing flows"),
    ("BP-08", "Name start events",
     "Start events should carry a name describing what starts the process.",
     "start event named Order received",
     "unnamed start event"),
    ("BP-09", "Message start events receive a message flow",
     "A message start event should be the target of a message flow showing where the message comes from.",
     "message start targeted by a message flow",
     "message start with no incoming message flow"),
    ("BP-10", "Message catch events receive a message flow",
     "A message intermediate catch event should be the target of a message flow.",
     "message catch targeted by a message flow",
     "message catch with no incoming message flow"),
    ("BP-11", "Message throw events send a message flow",
     "A message intermediate throw event should be the source of a message flow.",
     "message throw with an outgoing message flow",
     "message throw with no outgoing message flow"),
    ("BP-12", "Name intermediate events",
     "Intermediate catch and throw events should be named.",
     "timer catch named Wait 2 days",
     "unnamed timer catch"),
    ("BP-13", "Name end events distinctly",
     "End events should be named after the end state they represent, and two end events in one container should not share a name.",
     "end events named Approved and Rejected",
     "two end events both named Done"),
    ("BP-14", "Sub-process end names match the following decision's branches",
     "When a sub-process is followed by a yes/no gateway (a name ending in ?), at least one of the sub-process's end events should be named like one of the gateway's branches.",
     "end event Approved before gateway Approved? with branch Approved",
     "end event Finished before gateway Approved? with branches Yes and No"),
    ("BP-15", "Exclusive gateways have a default flow",
     "A splitting exclusive gateway should designate a default flow.",
     "exclusive split with a default flow",
     "exclusive split without a default flow"),
    ("BP-16", "Inclusive gateways have a default flow",
     "A splitting inclusive gateway should designate a default flow.",
     "inclusive split with a default flow",
     "inclusive split without a default flow"),
    ("BP-17", "Complex gateways have a default flow",
     "A splitting complex gateway should designate a default flow.",
     "complex split with a default flow",
     "complex split without a default flow"),
    ("BP-18", "Match parallel splits and joins",
     "The branches of a parallel split should reconverge at one parallel join with as many incoming flows as the split has outgoing flows.",
     "two-way parallel split closed by a two-way parallel join",
     "three-way parallel split closed by a two-way parallel join"),
    ("BP-19", "Match inclusive splits and joins",
     "The branches of an inclusive split should reconverge at one inclusive join with as many incoming flows as the split has outgoing flows.",
     "two-way inclusive split closed by a two-way inclusive join",
     "three-way inclusive split closed by a two-way inclusive join"),
    ("BP-20", "Merge with a gateway before an event",
     "Paths merging into an event should be merged by a gateway first.",
     "exclusive join in front of an end event",
     "two flows entering one end event"),
    ("BP-21", "Don't merge and split in one gateway",
     "A gateway that both merges and splits is hard to read; use two gateways.",
     "separate merging and splitting gateways",
     "gateway with two incoming and two outgoing flows"),
    ("BP-22", "Name exclusive gateway branches",
     "At most one outgoing flow of an exclusive gateway should be unnamed.",
     "exclusive split with branches named Yes and No",
     "exclusive split with two unnamed branches"),
    ("BP-23", "Name inclusive gateway branches",
     "Every outgoing flow of an inclusive gateway should be named.",
     "inclusive split with all branches named",
     "inclusive split with an unnamed branch"),
    ("BP-24", "Decision question follows from the sub-process end name",
     "When a sub-process is followed by a yes/no gateway, one of its end events should be named like the gateway's question without the question mark.",
     "end event Approved before gateway Approved?",
     "end events Done and Failed before gateway Approved?"),
    ("BP-25", "Name activities",
     "Activities should be named.",
     "task named Check order",
     "unnamed task"),
    ("BP-26", "Use distinct activity names in a process",
     "Two activities in the same process should not share a name; reuse a global activity instead.",
     "tasks named Review and Approve",
     "two tasks named Review"),
    ("BP-27", "Send tasks send a message flow",
     "A send task should be the source of a message flow.",
     "send task with an outgoing message flow",
     "send task with no message flow"),
    ("BP-28", "Receive tasks receive a message flow",
     "A receive task should be the target of a message flow.",
     "receive task with an incoming message flow",
     "receive task with no message flow"),
    ("BP-29", "Sub-processes before a decision have several end events",
     "A sub-process followed by a gateway whose name is a question should have more than one end event, one per possible answer.",
     "sub-process with end events Approved and Rejected before Approved?",
     "sub-process with a single end event before Approved?"),
    ("BP-30", "Name message flows after their message",
     "A message flow should carry the name of the message it transports.",
     "message flow Invoice carrying message Invoice",
     "message flow named Data carrying message Invoice"),
    ("BP-31", "Connect text annotations",
     "A text annotation should be associated with the element it explains.",
     "annotation associated with a task",
     "free-floating annotation"),
    ("BP-32", "Text annotation associations have no direction",
     "Associations touching a text annotation should have associationDirection None.",
     "annotation association without arrowheads",
     "annotation association with direction One"),
];
