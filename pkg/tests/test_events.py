"""
Tests del bus de eventos.
"""
import os
import sys

# Agregar el directorio raíz al path para importaciones
ROOT_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
if ROOT_DIR not in sys.path:
    sys.path.insert(0, ROOT_DIR)

from events import (
    EventBus,
    EventType,
    event_bus,
    on_audit_decided,
    on_graph_found,
    on_sweep_finished,
)


def test_event_bus_is_a_singleton():
    assert EventBus() is event_bus


def test_subscribe_and_unsubscribe():
    received = []
    callback = received.append
    event_bus.subscribe(EventType.GRAPH_FOUND, callback)
    try:
        on_graph_found(4, "Ch", 1)
    finally:
        event_bus.unsubscribe(EventType.GRAPH_FOUND, callback)
    on_graph_found(4, "Ch", 1)
    assert len(received) == 1
    assert received[0].data == {'order': 4, 'graph6': "Ch", 'kappa': 1}
    assert received[0].source == "classify"


def test_failing_callback_does_not_stop_others(capsys):
    received = []

    def broken(_event):
        raise RuntimeError("boom")

    event_bus.subscribe(EventType.SWEEP_FINISHED, broken)
    event_bus.subscribe(EventType.SWEEP_FINISHED, received.append)
    try:
        on_sweep_finished({'found': 0})
    finally:
        event_bus.unsubscribe(EventType.SWEEP_FINISHED, broken)
        event_bus.unsubscribe(EventType.SWEEP_FINISHED, received.append)
    assert len(received) == 1
    assert "boom" in capsys.readouterr().err


def test_history_filter():
    event_bus.clear_history()
    on_audit_decided("toy", "IS_ONE", "adim1", 0.1)
    on_graph_found(6, "E?Bw", 1)
    audits = event_bus.get_recent_events(EventType.AUDIT_DECIDED)
    assert len(audits) == 1
    assert audits[0].data['verdict'] == "IS_ONE"
    assert len(event_bus.get_recent_events()) == 2
