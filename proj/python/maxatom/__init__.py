"""Max-atom constraint solving: conjunctions of max(z,y)+r >= x over the
rationals extended with -inf, a rewriting solver with verified answers, two
reference oracles, and a differential trial runner."""

try:
    from ._maxatom import (  # installed wheel layout
        AtomSystem,
        emit_instance,
        exhaustive,
        generate,
        kleene,
        parse_instance,
        run_trial,
        solve,
        verify_text,
        verify_values,
    )
except ImportError:  # development build: extension on sys.path
    from _maxatom import (
        AtomSystem,
        emit_instance,
        exhaustive,
        generate,
        kleene,
        parse_instance,
        run_trial,
        solve,
        verify_text,
        verify_values,
    )

__all__ = [
    "AtomSystem",
    "emit_instance",
    "exhaustive",
    "generate",
    "kleene",
    "parse_instance",
    "run_trial",
    "solve",
    "verify_text",
    "verify_values",
]
