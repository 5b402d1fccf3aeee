"""
Bus de eventos del framework.

Desacopla los bucles largos (clasificación, barridos, auditorías) de quien
muestra el progreso. El CLI se suscribe y escribe en stderr; los tests
inspeccionan el historial acotado.
"""
import threading
from collections import defaultdict, deque
from dataclasses import dataclass, field
from datetime import datetime
from enum import Enum
from typing import Any, Callable, Deque, Dict, List, Optional

from utils.utils import Utils


class EventType(Enum):
    # Experimentos
    GRAPH_FOUND = "graph_found"
    CLASSIFICATION_ROW = "classification_row"
    SWEEP_STARTED = "sweep_started"
    SWEEP_FINISHED = "sweep_finished"
    AUDIT_DECIDED = "audit_decided"

    # Análisis e ingesta
    BUDGET_EXCEEDED = "budget_exceeded"
    MALFORMED_INPUT = "malformed_input"


@dataclass
class Event:
    """Un aviso de progreso: tipo, carga útil y componente emisor."""
    event_type: EventType
    data: Dict[str, Any]
    source: str = ""
    timestamp: datetime = field(default_factory=datetime.now)


EventCallback = Callable[[Event], None]

HISTORY_SIZE = 1000


class EventBus:
    """
    Single process-wide bus. Callbacks run outside the lock, in subscription
    order; a failing callback is logged and the rest still run.
    """
    _instance: Optional["EventBus"] = None
    _instance_lock = threading.Lock()

    def __new__(cls):
        with cls._instance_lock:
            if cls._instance is None:
                bus = super().__new__(cls)
                bus._handlers = defaultdict(list)
                bus._history = deque(maxlen=HISTORY_SIZE)
                bus._mutex = threading.Lock()
                cls._instance = bus
        return cls._instance

    _handlers: Dict[EventType, List[EventCallback]]
    _history: Deque[Event]

    def subscribe(self, event_type: EventType, callback: EventCallback) -> None:
        with self._mutex:
            self._handlers[event_type].append(callback)

    def subscribe_all(self, callback: EventCallback) -> None:
        with self._mutex:
            for event_type in EventType:
                self._handlers[event_type].append(callback)

    def unsubscribe(self, event_type: EventType, callback: EventCallback) -> None:
        """Removes one registration of callback; unknown callbacks are ignored."""
        with self._mutex:
            handlers = self._handlers.get(event_type, [])
            if callback in handlers:
                handlers.remove(callback)

    def publish(self, event: Event) -> None:
        with self._mutex:
            self._history.append(event)
            handlers = tuple(self._handlers.get(event.event_type, ()))
        for callback in handlers:
            try:
                callback(event)
            except Exception as exc:
                Utils.log_error("EventBus", f"{event.event_type.value} callback failed: {exc}")

    def emit(self, event_type: EventType, data: Dict[str, Any], source: str = "") -> None:
        self.publish(Event(event_type=event_type, data=data, source=source))

    def get_recent_events(self, event_type: Optional[EventType] = None, limit: int = 50) -> List[Event]:
        """
        Latest events, oldest first.

        Args:
            event_type: Only events of this type (None = all).
            limit: Max number returned.
        """
        with self._mutex:
            events = [e for e in self._history if event_type is None or e.event_type is event_type]
        return events[-limit:]

    def clear_history(self) -> None:
        with self._mutex:
            self._history.clear()

    def clear_subscribers(self) -> None:
        with self._mutex:
            self._handlers.clear()


event_bus = EventBus()


# ==================== EMISORES ====================

def on_graph_found(order: int, graph6: str, kappa: int, source: str = "classify"):
    """Un grafo 1-métrico antidimensional encontrado."""
    event_bus.emit(
        EventType.GRAPH_FOUND,
        {'order': order, 'graph6': graph6, 'kappa': kappa},
        source=source,
    )


def on_classification_row(row: Dict[str, Any]):
    event_bus.emit(EventType.CLASSIFICATION_ROW, row, source="classify")


def on_sweep_started(config: Dict[str, Any], workers: int):
    event_bus.emit(EventType.SWEEP_STARTED, {'config': config, 'workers': workers}, source="sweep")


def on_sweep_finished(record: Dict[str, Any]):
    event_bus.emit(EventType.SWEEP_FINISHED, record, source="sweep")


def on_audit_decided(name: str, verdict: str, decided_by: str, seconds: float):
    event_bus.emit(
        EventType.AUDIT_DECIDED,
        {'name': name, 'verdict': verdict, 'decided_by': decided_by, 'seconds': seconds},
        source="audit",
    )


def on_budget_exceeded(stage: str, seconds: float, source: str = "analyze"):
    event_bus.emit(EventType.BUDGET_EXCEEDED, {'stage': stage, 'seconds': seconds}, source=source)


def on_malformed_input(where: str, error: str, source: str = "ingest"):
    event_bus.emit(EventType.MALFORMED_INPUT, {'where': where, 'error': error}, source=source)
