"""HTTP wrapper: POST a session and a command, get the canonical output back."""

from __future__ import annotations

from fastapi import FastAPI
from pydantic import BaseModel, Field

from .cli import UsageError, run_command
from .config import DegreeOverflow
from .parse import ParseError
from .session import SessionError, parse_session

app = FastAPI(title="singulocus", version="0.1.0")


class ComputeRequest(BaseModel):
    session_text: str = Field(description="session file content")
    command: str = Field(description="command string, e.g. 'anncoker A'")
    json_output: bool = False


class ComputeResponse(BaseModel):
    exit_code: int
    output: str


@app.get("/health")
def health():
    return {"status": "ok"}


@app.post("/compute", response_model=ComputeResponse)
def compute(req: ComputeRequest) -> ComputeResponse:
    try:
        session = parse_session(req.session_text)
    except (SessionError, ParseError) as exc:
        return ComputeResponse(exit_code=1, output=f"error: {exc}\n")
    try:
        out, code = run_command(session, req.command, json_output=req.json_output)
    except (UsageError, KeyError, ParseError, ValueError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) else str(exc)
        return ComputeResponse(exit_code=1, output=f"error: {msg}\n")
    except DegreeOverflow as exc:
        return ComputeResponse(exit_code=2, output=f"error: {exc}\n")
    return ComputeResponse(exit_code=code, output=out)
