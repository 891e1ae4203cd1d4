"""Session-oriented HTTP API over triangulation state.

Sessions live in memory; each holds a current description plus the flip
history, and replaying the history from the initial description always
reproduces the current one.  Requests touching one session are serialized
by a per-session lock; distinct sessions are independent.
"""

from __future__ import annotations

import threading
import uuid
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from fastapi import FastAPI, Query, Request
from fastapi.responses import JSONResponse, Response

from .arcs import Arc, ArcParseError, parse_arc
from .cluster import NoQuadrilateralError, flip, quiver
from .codec import encode_desc
from .render import RenderSpec, render_svg
from .triangulation import (
    InvalidDescription,
    TriangulationDesc,
    component_count,
    fountains,
    is_compact,
    validate,
    validate_cached,
)


@dataclass
class Session:
    id: str
    initial: TriangulationDesc
    current: TriangulationDesc
    history: list[tuple[Arc, Arc]] = field(default_factory=list)
    lock: threading.Lock = field(default_factory=threading.Lock)


def _err(status: int, code: str, message: str) -> JSONResponse:
    return JSONResponse(status_code=status, content={"error": code, "message": message})


def _status_payload(desc: TriangulationDesc) -> dict:
    report = validate_cached(desc)
    out: dict = {"certified": report.certified_maximal}
    if report.certified_maximal:
        compact, witness = is_compact(desc, report)
        out["compact"] = compact
        if compact:
            fs = fountains(desc, report)
            out["fountains"] = [{"base": str(f.base), "kind": f.kind} for f in fs]
            out["components"] = component_count(desc, report)[2]
        else:
            out["compact_witness"] = witness
    return out


def create_app(persist_dir: Optional[str] = None) -> FastAPI:
    app = FastAPI(title="strip triangulation sessions")
    sessions: dict[str, Session] = {}
    registry_lock = threading.Lock()

    def persist(s: Session) -> None:
        if persist_dir:
            Path(persist_dir, f"{s.id}.json").write_text(encode_desc(s.current))

    def get_session(sid: str) -> Optional[Session]:
        with registry_lock:
            return sessions.get(sid)

    @app.post("/sessions", status_code=201)
    async def create_session(request: Request):
        body = await request.json()
        try:
            desc = TriangulationDesc.from_json(body)
        except (InvalidDescription, ArcParseError, ValueError) as exc:
            return _err(422, "invalid_description", str(exc))
        report = validate(desc)
        if not (report.pairwise_noncrossing and report.certified_maximal):
            return JSONResponse(
                status_code=422,
                content={
                    "error": "not_certified",
                    "message": "description failed validation",
                    "report": {
                        "noncrossing": report.pairwise_noncrossing,
                        "window_maximal": report.window_maximal,
                        "certified_maximal": report.certified_maximal,
                        "notes": list(report.notes),
                    },
                },
            )
        sid = uuid.uuid4().hex
        s = Session(sid, desc, desc)
        with registry_lock:
            sessions[sid] = s
        persist(s)
        return {"id": sid}

    @app.get("/sessions/{sid}")
    def get_state(sid: str):
        s = get_session(sid)
        if s is None:
            return _err(404, "unknown_session", f"no session {sid}")
        with s.lock:
            desc = s.current
            history = [{"removed": str(a), "added": str(b)} for a, b in s.history]
        return {
            "id": sid,
            "desc": desc.to_json(),
            "status": _status_payload(desc),
            "history": history,
        }

    @app.get("/sessions/{sid}/window")
    def get_window(sid: str, lo: int, hi: int, unit: int = 40):
        s = get_session(sid)
        if s is None:
            return _err(404, "unknown_session", f"no session {sid}")
        if lo > hi:
            return _err(400, "bad_window", "window needs lo <= hi")
        with s.lock:
            desc = s.current
        arcs = [str(u) for u in desc.members_in_window(lo, hi)]
        report = validate_cached(desc)
        q = None
        if report.certified_maximal and is_compact(desc, report)[0]:
            q = quiver(desc, (lo, hi), report).to_json()
        svg = render_svg(desc, RenderSpec(window=(lo, hi), unit=unit))
        return {"arcs": arcs, "quiver": q, "svg": svg}

    @app.post("/sessions/{sid}/flip")
    async def do_flip(sid: str, request: Request):
        s = get_session(sid)
        if s is None:
            return _err(404, "unknown_session", f"no session {sid}")
        body = await request.json()
        try:
            arc = parse_arc(str(body.get("arc", "")))
        except ArcParseError as exc:
            return _err(400, "bad_arc", str(exc))
        with s.lock:
            if not s.current.contains(arc):
                return _err(409, "not_member", f"{arc} is not in the triangulation")
            try:
                new_desc, replacement = flip(s.current, arc)
            except NoQuadrilateralError as exc:
                return _err(409, "no_quadrilateral", str(exc))
            s.current = new_desc
            s.history.append((arc, replacement))
            persist(s)
            desc = s.current
        lo, hi = desc.window
        wlo, whi = lo - 3, hi + 3
        report = validate_cached(desc)
        qd = None
        if report.certified_maximal and is_compact(desc, report)[0]:
            qd = quiver(desc, (wlo, whi), report).to_json()
        return {
            "removed": str(arc),
            "added": str(replacement),
            "quiver_delta": {"window": [wlo, whi], "quiver": qd},
        }

    @app.post("/sessions/{sid}/undo")
    def undo(sid: str):
        s = get_session(sid)
        if s is None:
            return _err(404, "unknown_session", f"no session {sid}")
        with s.lock:
            if not s.history:
                return _err(409, "empty_history", "nothing to undo")
            removed, added = s.history.pop()
            new_desc, back = flip(s.current, added)
            if back != removed:
                return _err(500, "undo_mismatch", f"flip back gave {back}, expected {removed}")
            s.current = new_desc
            persist(s)
        return {"removed": str(added), "added": str(removed)}

    def _pair_dim(sid: str, src: str, dst: str, use_ext: bool):
        if get_session(sid) is None:
            return _err(404, "unknown_session", f"no session {sid}")
        try:
            a, b = parse_arc(src), parse_arc(dst)
        except ArcParseError as exc:
            return _err(400, "bad_arc", str(exc))
        from .cluster import ext_dim, hom_dim

        return {"dim": ext_dim(a, b) if use_ext else hom_dim(a, b)}

    @app.get("/sessions/{sid}/hom")
    def hom(sid: str, src: str = Query(alias="from"), to: str = Query()):
        return _pair_dim(sid, src, to, use_ext=False)

    @app.get("/sessions/{sid}/ext")
    def ext(sid: str, src: str = Query(alias="from"), to: str = Query()):
        return _pair_dim(sid, src, to, use_ext=True)

    @app.get("/sessions/{sid}/svg")
    def svg(sid: str, lo: Optional[int] = None, hi: Optional[int] = None, unit: int = 40):
        s = get_session(sid)
        if s is None:
            return _err(404, "unknown_session", f"no session {sid}")
        with s.lock:
            desc = s.current
        if lo is None or hi is None:
            lo, hi = desc.window[0] - 3, desc.window[1] + 3
        if lo > hi:
            return _err(400, "bad_window", "window needs lo <= hi")
        text = render_svg(desc, RenderSpec(window=(lo, hi), unit=unit))
        return Response(content=text, media_type="image/svg+xml")

    return app
