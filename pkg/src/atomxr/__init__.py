"""AtomXR authoring stack, headless.

Subpackages:
    lang      AtomScript tokenizer, parser, printer, validator
    scene     scene specification document, commands, undo journal, stores
    runtime   deterministic fixed-timestep interpreter
    kernels   compiled collision/vector kernels with pure-Python fallback
    intent    natural-language to AtomCommand pipeline
    assets    embedding-based asset catalog resolution
    server    session-scoped authoring service (HTTP + WebSocket)
    cli       REPL and batch tooling
"""

__version__ = "0.1.0"
