#!/usr/bin/env python3
"""Send one bundled scenario run to Langfuse"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent))

from src.config import config
from src.routing.scenario import BUNDLED, bundled_scenario, load_scenario
from src.routing.simulator import run
from src.tracing.tracer import RunTracer


def trace_scenario(name: str) -> bool:
    """Run a bundled scenario and trace it"""
    print(f"🔍 Tracing scenario '{name}'...\n")

    if not config.tracing_enabled():
        print("❌ Tracing is disabled: set LANGFUSE_PUBLIC_KEY/LANGFUSE_SECRET_KEY")
        return False

    try:
        scenario = load_scenario(bundled_scenario(name))
        log = run(scenario)
        print(f"Scenario: {scenario.title}")
        print(f"  Paths: {', '.join(path.id for path in scenario.paths)}")
        print(f"  Records: {len(log.records)}, final best {log.records[-1].best}")
        print()

        with RunTracer() as tracer:
            trace_id = tracer.trace_simulation(scenario, log)

        if trace_id is None:
            print("❌ No trace created, see the warnings above")
            return False
        print(f"✅ Trace ID: {trace_id}")
        print(f"\nView trace at: {config.LANGFUSE_HOST}")
        return True

    except Exception as e:
        print(f"❌ Error: {e}")
        import traceback
        traceback.print_exc()
        return False


if __name__ == "__main__":
    name = sys.argv[1] if len(sys.argv) > 1 else BUNDLED[0]
    success = trace_scenario(name)
    sys.exit(0 if success else 1)
