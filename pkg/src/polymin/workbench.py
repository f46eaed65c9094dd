"""HTTP session service for interactive Karnaugh-map simplification.

A session holds one target function and the terms accepted so far.  The
client proposes groupings of 1 to 3 cubes; the server answers with every
sound gate combination for them, and the client accepts one to shrink the
remaining demand.  Completion is only ever reported after a full
equivalence check of the accepted sum against the target.

Candidate ids are single-use nonces scoped to the latest try-group call, so
a candidate computed against a stale session state can never be accepted.
"""

from __future__ import annotations

import hashlib
import os
import secrets
import threading
import time
from dataclasses import dataclass, field

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel

from .benchmarks import gen_benchmark
from .cubes import Cube
from .kmap import kmap_layout
from .minimizer import MinimizeConfig, candidate_pool, _popcount, _sum_terms
from .polyfunc import ArityError, PolyFunction, equivalent, print_expr
from .ppla import PplaError, parse_ppla
from .rules import TermCandidate, match_pair, match_single, match_triple

SCHEMA_VERSION = 1
DEFAULT_TTL_SECS = 3600


@dataclass
class Session:
    id: str
    function: PolyFunction
    accepted: list[TermCandidate] = field(default_factory=list)
    history: list[TermCandidate] = field(default_factory=list)
    pending: dict[str, TermCandidate] = field(default_factory=dict)
    lock: threading.Lock = field(default_factory=threading.Lock)
    last_touch: float = field(default_factory=time.monotonic)

    def demand_masks(self) -> tuple[int, int]:
        # Always recomputed from the accepted terms, never updated in place.
        rem1 = self.function.mode_mask(1)
        rem2 = self.function.mode_mask(2)
        for t in self.accepted:
            rem1 &= ~t.coverage_mask(self.function, 1)
            rem2 &= ~t.coverage_mask(self.function, 2)
        return rem1, rem2

    def is_complete(self) -> bool:
        rem1, rem2 = self.demand_masks()
        if rem1 or rem2:
            return False
        # Never report completion on bookkeeping alone.
        return equivalent(_sum_terms(self.accepted), self.function)


def session_state_hash(session: Session) -> str:
    """Digest of the observable session state (pending nonces excluded)."""
    h = hashlib.sha256()
    h.update(f"{session.function.n}:{session.function.mode_mask(1)}:{session.function.mode_mask(2)}".encode())
    for t in session.accepted:
        h.update(print_expr(t.expr).encode())
        h.update(b"|")
    return h.hexdigest()


class SessionStore:
    def __init__(self, ttl_secs: float = DEFAULT_TTL_SECS):
        self.ttl = ttl_secs
        self._sessions: dict[str, Session] = {}
        self._lock = threading.Lock()

    def create(self, f: PolyFunction) -> Session:
        session = Session(id=secrets.token_hex(8), function=f)
        with self._lock:
            self._evict()
            self._sessions[session.id] = session
        return session

    def get(self, session_id: str) -> Session:
        with self._lock:
            self._evict()
            session = self._sessions.get(session_id)
            if session is None:
                raise HTTPException(status_code=404, detail="unknown or expired session")
            session.last_touch = time.monotonic()
            return session

    def _evict(self) -> None:
        now = time.monotonic()
        dead = [sid for sid, s in self._sessions.items() if now - s.last_touch > self.ttl]
        for sid in dead:
            del self._sessions[sid]


class CreateSessionRequest(BaseModel):
    ppla: str | None = None
    benchmark: str | None = None


class TryGroupRequest(BaseModel):
    cubes: list[str]


class AcceptRequest(BaseModel):
    candidate_id: str


def _candidate_payload(cand: TermCandidate, f: PolyFunction, rem1: int, rem2: int, cid: str | None) -> dict:
    data = cand.to_json()
    data["id"] = cid
    data["newly_covered"] = _popcount(cand.coverage_mask(f, 1) & rem1) + _popcount(
        cand.coverage_mask(f, 2) & rem2
    )
    return data


def _demand_payload(n: int, rem1: int, rem2: int) -> list[dict]:
    out = []
    for mode, rem in ((1, rem1), (2, rem2)):
        for k in range(1 << n):
            if (rem >> k) & 1:
                out.append({"input": format(k, f"0{n}b"), "mode": mode})
    return out


def _state_payload(session: Session) -> dict:
    rem1, rem2 = session.demand_masks()
    return {
        "schema": SCHEMA_VERSION,
        "session_id": session.id,
        "demand_remaining": _demand_payload(session.function.n, rem1, rem2),
        "expr": print_expr(_sum_terms(session.accepted)),
        "accepted_terms": [t.to_json() for t in session.accepted],
        "complete": session.is_complete(),
    }


def create_app(ttl_secs: float | None = None) -> FastAPI:
    if ttl_secs is None:
        ttl_secs = float(os.environ.get("SESSION_TTL_SECS", DEFAULT_TTL_SECS))
    store = SessionStore(ttl_secs)
    app = FastAPI(
        title="polymin workbench",
        version="1.0.0",
        description="Interactive dual-mode Karnaugh-map simplification sessions.",
    )
    app.add_middleware(
        CORSMiddleware,
        allow_origins=[os.environ.get("UI_ORIGIN", "*")],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    app.state.store = store

    @app.get("/healthz")
    def healthz() -> dict:
        return {"ok": True, "schema": SCHEMA_VERSION}

    @app.post("/sessions")
    def create_session(body: CreateSessionRequest) -> dict:
        if (body.ppla is None) == (body.benchmark is None):
            raise HTTPException(status_code=400, detail="provide exactly one of ppla, benchmark")
        try:
            if body.ppla is not None:
                f = parse_ppla(body.ppla).to_function()
            else:
                f = gen_benchmark(body.benchmark)
        except (PplaError, ValueError, ArityError) as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from None
        session = store.create(f)
        payload = _state_payload(session)
        payload["n"] = f.n
        payload["cells"] = [
            {"input": format(k, f"0{f.n}b"), "value": str(f.value_at(k))}
            for k in range(1 << f.n)
        ]
        if 2 <= f.n <= 6:
            layout = kmap_layout(f.n)
            payload["kmap"] = {
                "row_vars": list(layout.row_vars),
                "col_vars": list(layout.col_vars),
                "row_labels": list(layout.row_labels),
                "col_labels": list(layout.col_labels),
            }
        return payload

    def _parse_cubes(session: Session, texts: list[str]) -> list[Cube]:
        if not 1 <= len(texts) <= 3:
            raise HTTPException(status_code=400, detail="provide 1 to 3 cubes")
        cubes = []
        for t in texts:
            try:
                c = Cube.from_string(t)
            except (ValueError, ArityError) as exc:
                raise HTTPException(status_code=400, detail=f"malformed cube {t!r}: {exc}") from None
            if c.n != session.function.n:
                raise HTTPException(
                    status_code=400,
                    detail=f"cube {t!r} has arity {c.n}, session arity is {session.function.n}",
                )
            cubes.append(c)
        if len(set(cubes)) != len(cubes):
            raise HTTPException(status_code=400, detail="cubes must be pairwise distinct")
        return cubes

    @app.post("/sessions/{session_id}/try-group")
    def try_group(session_id: str, body: TryGroupRequest) -> dict:
        session = store.get(session_id)
        with session.lock:
            cubes = _parse_cubes(session, body.cubes)
            f = session.function
            note = None
            candidates: list[TermCandidate] = []
            if len(cubes) == 1:
                single = match_single(f, cubes[0])
                if single is not None:
                    candidates.append(single)
            elif len(cubes) == 2:
                a, b = cubes
                if a.contains(b) or b.contains(a):
                    note = "one cube contains the other; try a single cube or a triple"
                else:
                    candidates.extend(match_pair(f, a, b))
            else:
                seen: set[str] = set()
                a, b, c = cubes
                for x, y, z in ((a, b, c), (a, c, b), (b, c, a)):
                    for cand in match_triple(f, x, y, z):
                        key = cand.dedup_key()
                        if key not in seen:
                            seen.add(key)
                            candidates.append(cand)
            candidates.sort(key=TermCandidate.sort_key)
            rem1, rem2 = session.demand_masks()
            session.pending = {secrets.token_hex(8): cand for cand in candidates}
            payload = {
                "schema": SCHEMA_VERSION,
                "candidates": [
                    _candidate_payload(cand, f, rem1, rem2, cid)
                    for cid, cand in session.pending.items()
                ],
            }
            if note is not None:
                payload["note"] = note
            return payload

    @app.post("/sessions/{session_id}/accept")
    def accept(session_id: str, body: AcceptRequest) -> dict:
        session = store.get(session_id)
        with session.lock:
            cand = session.pending.pop(body.candidate_id, None)
            if cand is None:
                raise HTTPException(
                    status_code=409,
                    detail="stale or unknown candidate id; run try-group again",
                )
            session.pending = {}
            session.accepted.append(cand)
            session.history.append(cand)
            return _state_payload(session)

    @app.post("/sessions/{session_id}/undo")
    def undo(session_id: str) -> dict:
        session = store.get(session_id)
        with session.lock:
            if not session.history:
                raise HTTPException(status_code=409, detail="nothing to undo")
            session.history.pop()
            session.accepted.pop()
            session.pending = {}
            return _state_payload(session)

    @app.get("/sessions/{session_id}/hint")
    def hint(session_id: str) -> dict:
        session = store.get(session_id)
        with session.lock:
            f = session.function
            rem1, rem2 = session.demand_masks()
            scored = []
            for cand in candidate_pool(f, MinimizeConfig()):
                gain = _popcount(cand.coverage_mask(f, 1) & rem1) + _popcount(
                    cand.coverage_mask(f, 2) & rem2
                )
                if gain > 0:
                    scored.append((-gain, cand.literal_count, cand.poly_gate_count, cand.sort_key(), cand))
            scored.sort(key=lambda item: item[:4])
            hints = [
                _candidate_payload(cand, f, rem1, rem2, None)
                for _, _, _, _, cand in scored[:3]
            ]
            return {"schema": SCHEMA_VERSION, "hints": hints}

    return app


app = create_app()


def serve(port: int | None = None) -> None:
    import uvicorn

    if port is None:
        port = int(os.environ.get("PORT", 8000))
    uvicorn.run(app, host="127.0.0.1", port=port)
