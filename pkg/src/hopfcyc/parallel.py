"""Thread cap for the independent checks the engine can dispatch in parallel.

``HOPFCYC_THREADS`` bounds the worker count; unset or invalid means serial.
Everything dispatched here is a pure function of immutable inputs, so
concurrent evaluation is safe by construction.
"""

import os
from concurrent.futures import ThreadPoolExecutor


def thread_cap():
    raw = os.environ.get("HOPFCYC_THREADS", "")
    try:
        value = int(raw)
    except ValueError:
        return 1
    return max(1, value)


def run_all(thunks):
    """Evaluate a list of zero-argument callables, possibly in parallel."""
    cap = thread_cap()
    if cap <= 1 or len(thunks) <= 1:
        return [f() for f in thunks]
    with ThreadPoolExecutor(max_workers=cap) as pool:
        return list(pool.map(lambda f: f(), thunks))
