"""HTTP facade over the solver and the duotaire engine.

Plain JSON over stdlib http.server; the engine does all arithmetic, the
handlers only translate.  Boards travel as fixed-coordinate '0'/'1'
texts; when an open-mode move extends the line leftward the response
reports the shift in offsetDelta and the resultBoard starts that many
cells left of the request board's cell 0.
"""
from __future__ import annotations

import json
import os
import threading
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from typing import Any

from .board import (
    BoardMode,
    GameVariant,
    Move,
    ParseError,
    Position,
    parse_position,
)
from .cache import cache_load, cache_store
from .duotaire import MemoStore, NoWinningMoveError, best_moves
from .duotaire import grundy as grundy_value
from .duotaire import options as engine_options
from .solver import NotSolvableError, is_solvable, min_pegs


class ApiError(Exception):
    def __init__(self, status: int, message: str) -> None:
        super().__init__(message)
        self.status = status
        self.message = message


def _parse_variant(name: Any) -> GameVariant:
    try:
        return GameVariant(name)
    except (ValueError, TypeError):
        raise ApiError(400, f"variant must be 'single' or 'multi', got {name!r}")


def _parse_mode(name: Any) -> BoardMode:
    try:
        return BoardMode(name)
    except (ValueError, TypeError):
        raise ApiError(400, f"mode must be 'fixed' or 'open', got {name!r}")


def _parse_board(text: Any, mode: BoardMode) -> Position:
    if not isinstance(text, str):
        raise ApiError(400, "board must be a '0'/'1' string")
    try:
        return parse_position(text, mode)
    except ParseError as exc:
        raise ApiError(400, str(exc))


def _move_record(request_board: str, p: Position, move: Move) -> dict:
    """Replay a move and describe it in the request board's coordinates.

    Open-mode positions are stored trimmed, so generator hops are shifted
    back by the position's origin before they go on the wire.
    """
    from .board import apply_move

    base = p.origin_offset if p.mode is BoardMode.OPEN else 0
    hops = [(h.from_ + base, h.over + base, h.to + base) for h in move.hops]
    after = apply_move(p, move)
    if p.mode is BoardMode.FIXED:
        board_text = after.word
        offset_delta = 0
    else:
        lo = min(0, min(min(f, t) for f, _, t in hops))
        hi = max(len(request_board), max(max(f, t) for f, _, t in hops) + 1)
        cells = ["0"] * (hi - lo)
        for i, cell in enumerate(after.cells):
            coord = after.origin_offset + i  # already request coordinates
            cells[coord - lo] = "1" if cell else "0"
        board_text = "".join(cells)
        offset_delta = lo
    return {
        "hops": [{"from": f, "over": o, "to": t} for f, o, t in hops],
        "resultBoard": board_text,
        "offsetDelta": offset_delta,
        "_position": after,
    }


def _public(record: dict) -> dict:
    return {k: v for k, v in record.items() if not k.startswith("_")}


class Api:
    """Endpoint logic, separated from HTTP plumbing for direct testing."""

    def __init__(self, store: MemoStore | None = None) -> None:
        self.store = MemoStore() if store is None else store

    def health(self) -> dict:
        return {"ok": True}

    def solve(self, body: dict) -> dict:
        board = _parse_board(body.get("board"), BoardMode.FIXED)
        if board.peg_count == 0:
            raise ApiError(400, "board has no pegs")
        solvable = is_solvable(board)
        k, plan = min_pegs(board)
        moves = []
        current = board
        for move in plan.moves:
            record = _move_record(current.word, current, move)
            current = record.pop("_position")
            moves.append(record)
        return {
            "solvable": solvable,
            "minPegs": k,
            "segments": [list(seg) for seg in plan.segments],
            "moves": moves,
        }

    def grundy(self, body: dict) -> dict:
        variant = _parse_variant(body.get("variant"))
        mode = _parse_mode(body.get("mode"))
        board = _parse_board(body.get("board"), mode)
        value = grundy_value(board, variant, self.store)
        return {"grundy": value, "isP": value == 0}

    def options(self, body: dict) -> dict:
        variant = _parse_variant(body.get("variant"))
        mode = _parse_mode(body.get("mode"))
        board = _parse_board(body.get("board"), mode)
        request_text = body["board"]
        out = []
        for move, result in engine_options(board, variant):
            record = _move_record(request_text, board, move)
            record.pop("_position")
            value = grundy_value(result, variant, self.store)
            out.append({"move": _public(record),
                        "resultBoard": record["resultBoard"],
                        "offsetDelta": record["offsetDelta"],
                        "grundy": value,
                        "isP": value == 0})
        return {"options": out}

    def best(self, body: dict) -> dict:
        variant = _parse_variant(body.get("variant"))
        mode = _parse_mode(body.get("mode"))
        board = _parse_board(body.get("board"), mode)
        try:
            winning = best_moves(board, variant, self.store)
        except NoWinningMoveError:
            raise ApiError(409, "no winning move")
        request_text = body["board"]
        moves = []
        for move in winning:
            record = _move_record(request_text, board, move)
            record.pop("_position")
            moves.append(record)
        return {"moves": moves}


class _Handler(BaseHTTPRequestHandler):
    api: Api
    ui_dir: str | None = None
    on_change: Any = None
    protocol_version = "HTTP/1.1"  # keep-alive; responses carry Content-Length

    def log_message(self, *args) -> None:  # keep test output quiet
        pass

    def _send(self, status: int, payload: dict) -> None:
        data = json.dumps(payload).encode()
        self.send_response(status)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(data)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.end_headers()
        self.wfile.write(data)

    def _send_file(self, path: str) -> None:
        content_types = {".html": "text/html", ".js": "text/javascript",
                         ".css": "text/css", ".map": "application/json"}
        ext = os.path.splitext(path)[1]
        with open(path, "rb") as fh:
            data = fh.read()
        self.send_response(200)
        self.send_header("Content-Type", content_types.get(ext, "application/octet-stream"))
        self.send_header("Content-Length", str(len(data)))
        self.end_headers()
        self.wfile.write(data)

    def do_GET(self) -> None:
        if self.path == "/api/health":
            self._send(200, self.api.health())
            return
        if self.ui_dir:
            rel = "index.html" if self.path in ("/", "") else self.path.lstrip("/")
            full = os.path.normpath(os.path.join(self.ui_dir, rel))
            if full.startswith(os.path.abspath(self.ui_dir)) and os.path.isfile(full):
                self._send_file(full)
                return
        self._send(404, {"error": "not found"})

    def do_POST(self) -> None:
        handlers = {"/api/solve": self.api.solve, "/api/grundy": self.api.grundy,
                    "/api/options": self.api.options, "/api/best": self.api.best}
        handler = handlers.get(self.path)
        if handler is None:
            self._send(404, {"error": "not found"})
            return
        try:
            length = int(self.headers.get("Content-Length", "0"))
            body = json.loads(self.rfile.read(length) or b"{}")
            if not isinstance(body, dict):
                raise ApiError(400, "request body must be a JSON object")
            result = handler(body)
        except ApiError as exc:
            self._send(exc.status, {"error": exc.message})
            return
        except (json.JSONDecodeError, NotSolvableError, ValueError) as exc:
            self._send(400, {"error": str(exc)})
            return
        self._send(200, result)
        if self.on_change is not None:
            self.on_change()


class Service:
    """Owns the HTTP server, the shared memo store and cache persistence."""

    def __init__(self, port: int = 8080, cache_path: str | None = None,
                 ui_dir: str | None = None) -> None:
        self.store = MemoStore()
        self.cache_path = os.environ.get("PEGLAB_CACHE") or cache_path
        if self.cache_path:
            self.store.load_records(cache_load(self.cache_path))
        self._persisted = len(self.store)
        self._lock = threading.Lock()
        self.api = Api(self.store)

        handler = type("Handler", (_Handler,), {
            "api": self.api,
            "ui_dir": os.path.abspath(ui_dir) if ui_dir else None,
            "on_change": self._maybe_persist,
        })
        self.server = ThreadingHTTPServer(("", port), handler)
        self.port = self.server.server_address[1]
        self._serving = threading.Event()

    def _maybe_persist(self) -> None:
        if not self.cache_path:
            return
        with self._lock:
            if len(self.store) != self._persisted:
                cache_store(self.cache_path, self.store.records())
                self._persisted = len(self.store)

    def serve_forever(self) -> None:
        self._serving.set()
        try:
            self.server.serve_forever()
        finally:
            self._serving.clear()
            self._maybe_persist()

    def shutdown(self) -> None:
        if self._serving.is_set():
            self.server.shutdown()
        self.server.server_close()
        self._maybe_persist()
