"""Langfuse integration for run tracing"""

import logging
from typing import Any, Optional, Sequence

from ..config import config
from ..models.benchmark import RunStatistics
from ..models.scenario import Scenario, SimulationLog
from ..models.tsp import Tour

logger = logging.getLogger(__name__)


def _langfuse_client():
    # Import from langfuse package; older v3 builds only expose the internal path
    try:
        from langfuse import Langfuse
    except ImportError:
        from langfuse._client.client import Langfuse

    return Langfuse(
        public_key=config.LANGFUSE_PUBLIC_KEY,
        secret_key=config.LANGFUSE_SECRET_KEY,
        host=config.LANGFUSE_HOST,
    )


class RunTracer:
    """
    Tracer for sending optimization runs to Langfuse.

    One trace per run: a root span carrying the inputs and outcome, with child
    spans for the individual steps. When no client is given and tracing is not
    enabled in config, every trace method is a no-op returning None. Tracing
    failures are logged and never interrupt the run.
    """

    def __init__(self, client: Optional[Any] = None):
        """
        Initialize tracer.

        Args:
            client: Langfuse client (defaults to one built from config when
                tracing is enabled)
        """
        if client is None and config.tracing_enabled():
            client = _langfuse_client()
        self.langfuse = client

    @property
    def enabled(self) -> bool:
        return self.langfuse is not None

    def _root(self, name: str, input: dict, output: dict, metadata: dict, tags: list):
        with self.langfuse.start_as_current_span(
            name=name, input=input, output=output, metadata=metadata
        ):
            trace_id = self.langfuse.get_current_trace_id()
            self.langfuse.update_current_trace(tags=["dso", *tags])
        return trace_id

    def _child(self, trace_id: str, name: str, input: dict, metadata: dict) -> None:
        from langfuse.types import TraceContext

        span = self.langfuse.start_span(
            name=name,
            trace_context=TraceContext(trace_id=trace_id),
            input=input,
            metadata=metadata,
        )
        span.end()

    def trace_simulation(self, scenario: Scenario, log: SimulationLog) -> Optional[str]:
        """
        Trace a routing scenario run.

        Args:
            scenario: The scenario that was run
            log: Its simulation log

        Returns:
            trace_id: ID of the created trace, or None when tracing is off
        """
        if not self.enabled:
            return None
        final = log.records[-1]
        try:
            trace_id = self._root(
                name="dso-routing-scenario",
                input={
                    "title": scenario.title,
                    "paths": [path.id for path in scenario.paths],
                    "events": len(scenario.events),
                },
                output={"best": final.best, "active_set": final.active_set},
                metadata={
                    "policy": scenario.policy.value,
                    "objective": scenario.objective.value,
                    "mode": final.mode.value,
                },
                tags=["routing", scenario.policy.value],
            )
            for record in log.records:
                try:
                    self._child(
                        trace_id,
                        name=f"tick:{record.tick}",
                        input={"event": record.event},
                        metadata={
                            "reaction": record.reaction,
                            "drop_detected": record.drop_detected,
                            "active_set": record.active_set,
                            "mode": record.mode.value,
                        },
                    )
                except Exception as e:
                    # One failed step span must not lose the whole trace
                    logger.warning("Failed to create step span: %s", e)
            return trace_id
        except Exception as e:
            logger.warning("Tracing scenario run failed: %s", e)
            return None

    def trace_benchmark(self, stats: Sequence[RunStatistics]) -> Optional[str]:
        """Trace benchmark statistics rows"""
        if not self.enabled or not stats:
            return None
        try:
            return self._root(
                name="dso-benchmark",
                input={"functions": [row.function.value for row in stats]},
                output={
                    row.function.value: {"avg": row.avg, "stddev": row.stddev} for row in stats
                },
                metadata={
                    "runs": stats[0].runs,
                    "population_size": stats[0].population_size,
                },
                tags=["benchmark"],
            )
        except Exception as e:
            logger.warning("Tracing benchmark failed: %s", e)
            return None

    def trace_tours(self, label: str, tours: Sequence[Tour]) -> Optional[str]:
        """Trace a set of TSP tours"""
        if not self.enabled or not tours:
            return None
        try:
            return self._root(
                name=f"dso-tsp-{label}",
                input={"starts": [tour.start for tour in tours]},
                output={
                    "tours": [{"sequence": tour.sequence, "weight": tour.weight} for tour in tours]
                },
                metadata={"best_weight": min(tour.weight for tour in tours)},
                tags=["tsp", label],
            )
        except Exception as e:
            logger.warning("Tracing tours failed: %s", e)
            return None

    def flush(self):
        """Ensure all data is sent to Langfuse"""
        if self.enabled:
            self.langfuse.flush()

    def shutdown(self):
        """Shutdown Langfuse client gracefully"""
        if self.enabled:
            self.langfuse.shutdown()

    def __enter__(self):
        """Context manager entry"""
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        """Context manager exit with automatic flush"""
        self.flush()
        return False
