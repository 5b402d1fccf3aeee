from .event_bus import (
    EventBus,
    Event,
    EventType,
    event_bus,
    on_graph_found,
    on_classification_row,
    on_sweep_started,
    on_sweep_finished,
    on_audit_decided,
    on_budget_exceeded,
    on_malformed_input,
)

__all__ = [
    'EventBus',
    'Event',
    'EventType',
    'event_bus',
    'on_graph_found',
    'on_classification_row',
    'on_sweep_started',
    'on_sweep_finished',
    'on_audit_decided',
    'on_budget_exceeded',
    'on_malformed_input',
]
