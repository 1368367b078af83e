"""Deterministic fixed-timestep AtomScript interpreter.

Execution model
---------------
start_play validates every script block, copies object poses out of the
scene spec, runs all top-level non-listener lines (script-block order,
then source order), then every onStart body, and finally computes the
initial contact set without firing any collision listeners.

Each tick then runs five phases in a fixed order:

    1. apply player displacement
    2. run every forever body (registration order)
    3. recompute sphere overlaps; fire onCollision bodies for pairs that
       began contact this tick (edge-triggered)
    4. consume queued button presses, firing onButtonPress bodies
    5. advance the clock

Runtime faults (division by zero, unknown objects, type mismatches) abort
the offending statement only: they are recorded in the trace as
runtimeError events and execution continues with the next statement.

Values are doubles, text, booleans, arrays, and null.  Arrays of equal
length support elementwise + and -, and scale by a number with * and /.
Text supports + as concatenation.  Reading an unassigned variable yields
null plus a warning event.
"""

from __future__ import annotations

import math

from atomxr import kernels
from atomxr.diagnostics import Diagnostic, has_errors
from atomxr.lang import nodes, validate
from atomxr.lang.validator import collect_assigned_names
from atomxr.runtime import events
from atomxr.runtime.config import RuntimeConfig
from atomxr.runtime.registry import DEFAULT_REGISTRY, BuiltinRegistry
from atomxr.runtime.state import (
    PLAYER_ID,
    ButtonListener,
    CollisionListener,
    ObjectPose,
    PlayerInput,
    RuntimeState,
    TimedInput,
)


class ValidationFailure(Exception):
    """start_play refuses to run scripts that do not validate cleanly."""

    def __init__(self, diagnostics: list[Diagnostic]):
        super().__init__("; ".join(str(d) for d in diagnostics))
        self.diagnostics = diagnostics


class UnknownObjectError(KeyError):
    pass


class _Fault(Exception):
    """Internal signal: aborts the current statement, recorded in the trace."""

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code
        self.message = message


def _type_name(value) -> str:
    if isinstance(value, bool):
        return "bool"
    if isinstance(value, float):
        return "number"
    if isinstance(value, str):
        return "text"
    if isinstance(value, list):
        return "array"
    if value is None:
        return "null"
    return type(value).__name__


def _require_number(value, what: str) -> float:
    if isinstance(value, bool) or not isinstance(value, float):
        raise _Fault("type-mismatch", f"{what} must be a number, got {_type_name(value)}")
    return value


def _require_text(value, what: str) -> str:
    if not isinstance(value, str):
        raise _Fault("type-mismatch", f"{what} must be text, got {_type_name(value)}")
    return value


def _require_bool(value, what: str) -> bool:
    if not isinstance(value, bool):
        raise _Fault("type-mismatch", f"{what} must be a bool, got {_type_name(value)}")
    return value


def _require_vector(value, what: str) -> list[float]:
    if not isinstance(value, list) or len(value) != 3:
        raise _Fault("type-mismatch", f"{what} must be a 3-element array")
    out = []
    for item in value:
        out.append(_require_number(item, f"{what} component"))
    return out


def values_equal(a, b) -> bool:
    """Equality over runtime values; different kinds are simply unequal."""
    ta, tb = _type_name(a), _type_name(b)
    if ta != tb:
        return False
    if ta == "array":
        return len(a) == len(b) and all(values_equal(x, y) for x, y in zip(a, b))
    return a == b


def eval_expression(expr, state: RuntimeState):
    if isinstance(expr, nodes.Constant):
        if expr.kind in (nodes.INT, nodes.FLOAT):
            return float(expr.value)
        return expr.value
    if isinstance(expr, nodes.Identifier):
        if expr.name in state.variables:
            return state.variables[expr.name]
        state.emit(events.RUNTIME_ERROR, {
            "severity": "warning",
            "code": "unknown-identifier",
            "message": f"variable {expr.name!r} read before assignment",
        })
        return None
    if isinstance(expr, nodes.ArrayLiteral):
        return [eval_expression(item, state) for item in expr.items]
    if isinstance(expr, nodes.FunctionCall):
        return call_builtin(expr.name, [eval_expression(a, state) for a in expr.args], state)
    if isinstance(expr, nodes.Paren):
        return eval_expression(expr.inner, state)
    if isinstance(expr, nodes.Not):
        return not _require_bool(eval_expression(expr.operand, state), "'!' operand")
    if isinstance(expr, nodes.Binary):
        return _eval_binary(expr, state)
    raise _Fault("internal", f"cannot evaluate {type(expr).__name__}")


def _eval_binary(expr: nodes.Binary, state: RuntimeState):
    op = expr.op
    if op in nodes.BOOL_OPS:
        lhs = _require_bool(eval_expression(expr.lhs, state), f"{op!r} operand")
        if op == "&&":
            if not lhs:
                return False
        else:  # ||
            if lhs:
                return True
        return _require_bool(eval_expression(expr.rhs, state), f"{op!r} operand")

    lhs = eval_expression(expr.lhs, state)
    rhs = eval_expression(expr.rhs, state)

    if op == "==":
        return values_equal(lhs, rhs)
    if op == "!=":
        return not values_equal(lhs, rhs)
    if op in ("<", ">", "<=", ">="):
        a = _require_number(lhs, f"{op!r} operand")
        b = _require_number(rhs, f"{op!r} operand")
        if op == "<":
            return a < b
        if op == ">":
            return a > b
        if op == "<=":
            return a <= b
        return a >= b
    return _arith(op, lhs, rhs)


def _arith(op: str, lhs, rhs):
    lnum = isinstance(lhs, float) and not isinstance(lhs, bool)
    rnum = isinstance(rhs, float) and not isinstance(rhs, bool)

    if lnum and rnum:
        if op == "+":
            return lhs + rhs
        if op == "-":
            return lhs - rhs
        if op == "*":
            return lhs * rhs
        if rhs == 0.0:
            raise _Fault("division-by-zero", "division by zero")
        return lhs / rhs

    if op == "+" and isinstance(lhs, str) and isinstance(rhs, str):
        return lhs + rhs

    if isinstance(lhs, list) and isinstance(rhs, list) and op in ("+", "-"):
        if len(lhs) != len(rhs):
            raise _Fault("length-mismatch",
                         f"array lengths differ: {len(lhs)} vs {len(rhs)}")
        out = []
        for x, y in zip(lhs, rhs):
            a = _require_number(x, "array element")
            b = _require_number(y, "array element")
            out.append(a + b if op == "+" else a - b)
        return out

    if op == "*":
        if isinstance(lhs, list) and rnum:
            return [_require_number(x, "array element") * rhs for x in lhs]
        if lnum and isinstance(rhs, list):
            return [lhs * _require_number(x, "array element") for x in rhs]
    if op == "/" and isinstance(lhs, list) and rnum:
        if rhs == 0.0:
            raise _Fault("division-by-zero", "division by zero")
        return [_require_number(x, "array element") / rhs for x in lhs]

    raise _Fault("type-mismatch",
                 f"cannot apply {op!r} to {_type_name(lhs)} and {_type_name(rhs)}")


# -- built-in dispatch -------------------------------------------------------


def _pose_for(state: RuntimeState, object_id, what: str) -> ObjectPose:
    name = _require_text(object_id, what)
    pose = state.poses.get(name)
    if pose is None:
        raise _Fault("unknown-object", f"no object named {name!r}")
    return pose


def call_builtin(name: str, args: list, state: RuntimeState,
                 registry: BuiltinRegistry = DEFAULT_REGISTRY):
    sig = registry.lookup(name)
    if sig is None:
        raise _Fault("unknown-function", f"there is no {name!r} function")
    if len(args) != sig.arity:
        raise _Fault("arity-mismatch",
                     f"{sig.name} takes {sig.arity} arguments, got {len(args)}")
    return _BUILTINS[sig.name](args, state)


def _builtin_move(args, state: RuntimeState):
    target = _require_text(args[0], "Move target")
    direction = _require_vector(args[2], "Move direction")
    speed = _resolve_speed_value(args[1], state)
    step = speed * state.config.dt
    if target == PLAYER_ID:
        position = state.player_position
    else:
        position = _pose_for(state, target, "Move target").position
    position[0], position[1], position[2] = kernels.displace(
        position[0], position[1], position[2],
        direction[0], direction[1], direction[2], step)
    return None


def _resolve_speed_value(value, state: RuntimeState) -> float:
    if isinstance(value, float) and not isinstance(value, bool):
        if value <= 0:
            raise _Fault("invalid-speed", f"speed must be positive, got {value}")
        return value
    word = _require_text(value, "speed")
    speed = state.config.resolve_speed(word)
    if speed is None:
        raise _Fault("invalid-speed", f"unknown speed {word!r}")
    return speed


def _builtin_rotate(args, state: RuntimeState):
    if args[0] == PLAYER_ID:
        raise _Fault("invalid-target", "the player cannot be rotated")
    pose = _pose_for(state, args[0], "Rotate target")
    rate = _require_vector(args[1], "Rotate rate")
    dt = state.config.dt
    pose.orientation[0] += rate[0] * dt
    pose.orientation[1] += rate[1] * dt
    pose.orientation[2] += rate[2] * dt
    return None


def _builtin_change_color(args, state: RuntimeState):
    if args[0] == PLAYER_ID:
        raise _Fault("invalid-target", "the player has no color")
    pose = _pose_for(state, args[0], "ChangeColor target")
    color = [min(1.0, max(0.0, c)) for c in _require_vector(args[1], "color")]
    if pose.color != color:
        pose.color = color
        state.emit(events.COLOR_CHANGED, {"id": args[0], "color": list(color)})
    return None


def _builtin_get_position(args, state: RuntimeState):
    name = _require_text(args[0], "GetPosition target")
    if name == PLAYER_ID:
        return list(state.player_position)
    return list(_pose_for(state, name, "GetPosition target").position)


def _builtin_play_sound(args, state: RuntimeState):
    sound = _require_text(args[0], "sound name")
    state.emit(events.SOUND_PLAYED, {"sound": sound})
    return None


def _builtin_disappear(args, state: RuntimeState):
    if args[0] == PLAYER_ID:
        raise _Fault("invalid-target", "the player cannot disappear")
    pose = _pose_for(state, args[0], "Disappear target")
    if pose.visible:
        pose.visible = False
        state.emit(events.OBJECT_DISAPPEARED, {"id": args[0]})
    return None


def _builtin_appear(args, state: RuntimeState):
    if args[0] == PLAYER_ID:
        raise _Fault("invalid-target", "the player is always present")
    pose = _pose_for(state, args[0], "Appear target")
    if not pose.visible:
        pose.visible = True
        state.emit(events.OBJECT_APPEARED, {"id": args[0]})
    return None


def _builtin_time_since_start(args, state: RuntimeState):
    return state.time_since_start()


def _builtin_create_object(args, state: RuntimeState):
    asset_type = _require_text(args[0], "asset type")
    if not asset_type:
        raise _Fault("invalid-argument", "asset type must be non-empty")
    n = 1
    while f"{asset_type}{n}" in state.poses:
        n += 1
    object_id = f"{asset_type}{n}"
    low, high = state.config.spawn_box
    position = [state.rng.uniform(low[axis], high[axis]) for axis in range(3)]
    state.poses[object_id] = ObjectPose(
        asset_type=asset_type,
        position=position,
        orientation=[0.0, 0.0, 0.0],
        size=[1.0, 1.0, 1.0],
        color=None,
        visible=True,
        is_button=asset_type == "button",
    )
    state.emit(events.OBJECT_CREATED, {
        "id": object_id, "assetType": asset_type, "position": list(position)})
    return object_id


def _builtin_delete_object(args, state: RuntimeState):
    if args[0] == PLAYER_ID:
        raise _Fault("invalid-target", "the player cannot be deleted")
    name = _require_text(args[0], "DeleteObject target")
    if name not in state.poses:
        raise _Fault("unknown-object", f"no object named {name!r}")
    del state.poses[name]
    state.contacts = {pair for pair in state.contacts if name not in pair}
    state.emit(events.OBJECT_DELETED, {"id": name})
    return None


_BUILTINS = {
    "Move": _builtin_move,
    "Rotate": _builtin_rotate,
    "ChangeColor": _builtin_change_color,
    "GetPosition": _builtin_get_position,
    "PlaySound": _builtin_play_sound,
    "Disappear": _builtin_disappear,
    "Appear": _builtin_appear,
    "TimeSinceStart": _builtin_time_since_start,
    "CreateObject": _builtin_create_object,
    "DeleteObject": _builtin_delete_object,
}


# -- statement execution -----------------------------------------------------


def _execute_line(line, state: RuntimeState) -> None:
    if isinstance(line, nodes.Assignment):
        value = eval_expression(line.value, state)
        previous = state.variables.get(line.name, _MISSING)
        if previous is _MISSING or not values_equal(previous, value):
            state.variables[line.name] = value
            state.emit(events.VAR_CHANGED, {"name": line.name, "value": value})
        return
    if isinstance(line, nodes.FunctionCall):
        call_builtin(line.name, [eval_expression(a, state) for a in line.args], state)
        return
    if isinstance(line, nodes.IfBlock):
        condition = _require_bool(eval_expression(line.condition, state), "if condition")
        if condition:
            execute_lines(line.body, state)
            return
        branch = line.else_branch
        if isinstance(branch, nodes.IfBlock):
            _execute_line(branch, state)
        elif branch is not None:
            execute_lines(branch, state)
        return
    if isinstance(line, nodes.ListenerBlock):
        # Nested listeners are validation errors; at runtime they are inert.
        return
    raise _Fault("internal", f"cannot execute {type(line).__name__}")


_MISSING = object()


def execute_lines(lines, state: RuntimeState) -> None:
    for line in lines:
        try:
            _execute_line(line, state)
        except _Fault as fault:
            state.emit(events.RUNTIME_ERROR, {
                "severity": "error", "code": fault.code, "message": fault.message})


# -- play-mode lifecycle -----------------------------------------------------


def validate_spec_scripts(spec, registry: BuiltinRegistry = DEFAULT_REGISTRY) -> list[Diagnostic]:
    """Validate every script block against the shared global namespace."""
    known: set[str] = set()
    for block in spec.scripts:
        known |= collect_assigned_names(block.ast)
    diagnostics: list[Diagnostic] = []
    for block in spec.scripts:
        diagnostics.extend(validate(block.ast, registry, known_names=known))
    return diagnostics


def start_play(spec, config: RuntimeConfig | None = None,
               registry: BuiltinRegistry = DEFAULT_REGISTRY) -> RuntimeState:
    config = config or RuntimeConfig()
    diagnostics = validate_spec_scripts(spec, registry)
    if has_errors(diagnostics):
        raise ValidationFailure(diagnostics)

    state = RuntimeState(config=config)
    state.rng.seed(config.seed)
    state.player_position = [float(c) for c in config.player_start]
    for obj in spec.objects:
        state.poses[obj.id] = ObjectPose(
            asset_type=obj.asset_type,
            position=list(obj.position),
            orientation=list(obj.orientation),
            size=list(obj.size),
            color=list(obj.color) if obj.color is not None else None,
            visible=obj.visible,
            is_button=obj.is_button,
        )

    top_level: list[tuple] = []
    start_bodies: list[tuple] = []
    for block in spec.scripts:
        plain = []
        for line in block.ast.lines:
            if isinstance(line, nodes.ListenerBlock):
                if line.kind == nodes.ON_START:
                    start_bodies.append(line.body)
                elif line.kind == nodes.FOREVER:
                    state.forever_listeners.append(line.body)
                elif line.kind == nodes.ON_COLLISION:
                    state.collision_listeners.append(CollisionListener(
                        line.type_args[0].value, line.type_args[1].value, line.body))
                elif line.kind == nodes.ON_BUTTON_PRESS:
                    state.button_listeners.append(ButtonListener(
                        line.type_args[0].value, line.body))
            else:
                plain.append(line)
        top_level.append(tuple(plain))

    for lines in top_level:
        execute_lines(lines, state)
    for body in start_bodies:
        execute_lines(body, state)

    # Authoring-time overlaps never fire onCollision.
    state.contacts = _compute_contacts(state)
    return state


def _compute_contacts(state: RuntimeState) -> set[tuple[str, str]]:
    ids = [PLAYER_ID]
    ids.extend(oid for oid, pose in state.poses.items() if pose.visible)
    xs = []
    ys = []
    zs = []
    radii = []
    for oid in ids:
        if oid == PLAYER_ID:
            x, y, z = state.player_position
        else:
            x, y, z = state.poses[oid].position
        xs.append(x)
        ys.append(y)
        zs.append(z)
        radii.append(state.radius_of(oid))
    pairs = kernels.overlap_pairs(xs, ys, zs, radii)
    return {_pair_key(ids[i], ids[j]) for i, j in pairs}


def _pair_key(a: str, b: str) -> tuple[str, str]:
    return (a, b) if a <= b else (b, a)


def tick(state: RuntimeState, player_input: PlayerInput | None = None) -> RuntimeState:
    inp = player_input or PlayerInput()

    # 1. player displacement
    state.player_position[0] += float(inp.dx)
    state.player_position[1] += float(inp.dy)
    state.player_position[2] += float(inp.dz)
    if inp.press is not None:
        press_button(state, inp.press)

    # 2. forever bodies
    for body in state.forever_listeners:
        execute_lines(body, state)

    # 3. collisions (edge-triggered on contact begin)
    new_contacts = _compute_contacts(state)
    began = sorted(new_contacts - state.contacts)
    state.contacts = new_contacts
    for a, b in began:
        state.emit(events.COLLISION_BEGAN, {"a": a, "b": b})
        for listener in state.collision_listeners:
            if listener.matches(a, b):
                if _pair_alive(state, a, b):
                    execute_lines(listener.body, state)

    # 4. queued button presses
    presses, state.pending_presses = state.pending_presses, []
    for pressed in presses:
        state.emit(events.BUTTON_PRESSED, {"id": pressed})
        for listener in state.button_listeners:
            if listener.target == pressed:
                execute_lines(listener.body, state)

    # 5. clock
    state.clock += 1
    return state


def _pair_alive(state: RuntimeState, a: str, b: str) -> bool:
    for oid in (a, b):
        if oid != PLAYER_ID and oid not in state.poses:
            return False
    return True


def press_button(state: RuntimeState, object_id: str) -> RuntimeState:
    """Queue a press; it is consumed by the next tick's button phase."""
    pose = state.poses.get(object_id)
    if pose is None or not pose.visible:
        raise UnknownObjectError(object_id)
    if not pose.is_button:
        state.emit(events.RUNTIME_ERROR, {
            "severity": "warning",
            "code": "not-a-button",
            "message": f"{object_id!r} is not a button object",
        })
    state.pending_presses.append(object_id)
    return state


def run_scenario(spec, config: RuntimeConfig | None = None,
                 script: list[TimedInput] = (),
                 until_tick: int = 0,
                 registry: BuiltinRegistry = DEFAULT_REGISTRY) -> RuntimeState:
    """Run a fully scripted play session and return the final state.

    Inputs scheduled for the same tick are merged: displacements add up and
    every press is queued (so two presses in one tick run the listener
    twice that tick).
    """
    config = config or RuntimeConfig()
    if until_tick > config.max_ticks:
        raise ValueError(f"until_tick {until_tick} exceeds max_ticks {config.max_ticks}")
    state = start_play(spec, config, registry)
    by_tick: dict[int, list[PlayerInput]] = {}
    for timed in script:
        by_tick.setdefault(timed.tick, []).append(timed.input)
    for t in range(until_tick):
        dx = dy = dz = 0.0
        for item in by_tick.get(t, ()):
            dx += float(item.dx)
            dy += float(item.dy)
            dz += float(item.dz)
            if item.press is not None:
                press_button(state, item.press)
        tick(state, PlayerInput(dx, dy, dz))
    return state


def normalize(vector: list[float]) -> list[float]:
    """Unit vector along `vector`; the zero vector maps to itself."""
    norm = math.sqrt(vector[0] ** 2 + vector[1] ** 2 + vector[2] ** 2)
    if norm == 0.0:
        return [0.0, 0.0, 0.0]
    return [vector[0] / norm, vector[1] / norm, vector[2] / norm]
