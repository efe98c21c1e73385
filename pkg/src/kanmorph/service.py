"""Local HTTP/JSON service backing the web UI.

Endpoints (UTF-8 JSON unless noted):

* GET  /check?word=W      verdict + suggestions for one word
* GET  /split?word=W      every sandhi split, primary first
* GET  /root?word=W       root and stripped markers
* POST /choice            {"misspelt": W, "chosen": W} -> suggestion memory
* POST /lexicon           {"word": W} -> add to the user lexicon
* POST /corpus            text/plain, JSON {"text": ...} or multipart "file"/
                          "text" field -> per-token report (GET ?text= works
                          for small inputs)
* GET  /                  web UI assets when a static directory is configured

Errors come back as {"error": {"code", "message"}} with a 4xx/5xx status.
"""

from __future__ import annotations

import json
import sys
from email.parser import BytesParser
from email.policy import default as email_default_policy
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from typing import Optional
from urllib.parse import parse_qs, urlparse
import os

from . import morph, sandhi, spell
from .runtime import Runtime, analysis_payload, split_payload, suggestion_payload
from .translit import InvalidRomanInput, UnmappableCodepoint, render, to_kannada

_CONTENT_TYPES = {
    ".html": "text/html; charset=utf-8",
    ".js": "text/javascript; charset=utf-8",
    ".css": "text/css; charset=utf-8",
    ".map": "application/json",
    ".svg": "image/svg+xml",
}

_FALLBACK_PAGE = b"""<!doctype html>
<meta charset="utf-8"><title>kanmorph</title>
<p>kanmorph service is running. The JSON API lives at /check, /split,
/root, /corpus, /choice and /lexicon. Build the web UI (frontend/) and
pass --static to serve it here.</p>
"""


class _Handler(BaseHTTPRequestHandler):
    runtime: Runtime = None  # set by serve()
    static_dir: Optional[str] = None

    # -- plumbing ---------------------------------------------------------

    def log_message(self, fmt, *args):  # quiet by default
        if self.server.verbose:  # type: ignore[attr-defined]
            sys.stderr.write("%s - %s\n" % (self.address_string(), fmt % args))

    def _send_json(self, payload, status: int = 200) -> None:
        body = json.dumps(payload, ensure_ascii=False).encode("utf-8")
        self.send_response(status)
        self.send_header("Content-Type", "application/json; charset=utf-8")
        self.send_header("Content-Length", str(len(body)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.end_headers()
        self.wfile.write(body)

    def _send_error_json(self, status: int, message: str) -> None:
        self._send_json({"error": {"code": status, "message": message}}, status)

    def _read_body(self) -> bytes:
        length = int(self.headers.get("Content-Length") or 0)
        return self.rfile.read(length) if length else b""

    def _word_param(self, query: dict) -> tuple:
        values = query.get("word")
        if not values or not values[0].strip():
            raise ValueError("missing ?word= parameter")
        return self.runtime.parse_word(values[0])

    # -- GET ----------------------------------------------------------------

    def do_GET(self):
        url = urlparse(self.path)
        query = parse_qs(url.query)
        try:
            if url.path == "/check":
                self._send_json(self._check_payload(*self._word_param(query)))
            elif url.path == "/split":
                self._send_json(self._split_payload(*self._word_param(query)))
            elif url.path == "/root":
                self._send_json(self._root_payload(*self._word_param(query)))
            elif url.path == "/corpus":
                text = (query.get("text") or [""])[0]
                self._send_json(self.runtime.corpus_report(text))
            elif url.path == "/rules":
                self._send_json([list(row) for row in sandhi.rule_table()])
            elif url.path == "/stats":
                count, fwd, rev = self.runtime.lexicon.stats()
                self._send_json({"word_count": count, "forward_states": fwd,
                                 "reverse_states": rev})
            else:
                self._serve_static(url.path)
        except (UnmappableCodepoint, InvalidRomanInput, ValueError) as exc:
            self._send_error_json(400, str(exc))
        except Exception as exc:  # pragma: no cover - defensive
            self._send_error_json(500, str(exc))

    # -- POST -----------------------------------------------------------------

    def do_POST(self):
        url = urlparse(self.path)
        try:
            if url.path == "/choice":
                data = self._json_body()
                misspelt, _ = self.runtime.parse_word(str(data["misspelt"]))
                chosen, _ = self.runtime.parse_word(str(data["chosen"]))
                self.runtime.record_choice(misspelt, chosen)
                self._send_json({"ok": True})
            elif url.path == "/lexicon":
                data = self._json_body()
                word, _ = self.runtime.parse_word(str(data["word"]))
                self.runtime.add_word(word)
                self._send_json({"ok": True,
                                 "word_count": self.runtime.lexicon.word_count})
            elif url.path == "/corpus":
                self._send_json(self.runtime.corpus_report(self._corpus_text()))
            else:
                self._send_error_json(404, "no such endpoint: %s" % url.path)
        except (UnmappableCodepoint, InvalidRomanInput, ValueError, KeyError) as exc:
            self._send_error_json(400, str(exc))
        except Exception as exc:  # pragma: no cover - defensive
            self._send_error_json(500, str(exc))

    def _json_body(self) -> dict:
        body = self._read_body()
        if not body:
            raise ValueError("empty request body")
        data = json.loads(body.decode("utf-8"))
        if not isinstance(data, dict):
            raise ValueError("expected a JSON object")
        return data

    def _corpus_text(self) -> str:
        ctype = self.headers.get("Content-Type", "")
        body = self._read_body()
        if ctype.startswith("multipart/"):
            message = BytesParser(policy=email_default_policy).parsebytes(
                b"Content-Type: " + ctype.encode("ascii") + b"\r\n\r\n" + body)
            for part in message.iter_parts():
                name = part.get_param("name", header="content-disposition")
                if name in ("file", "text"):
                    return part.get_payload(decode=True).decode("utf-8")
            raise ValueError('multipart body needs a "file" or "text" field')
        if ctype.startswith("application/json"):
            data = json.loads(body.decode("utf-8"))
            if not isinstance(data, dict) or "text" not in data:
                raise ValueError('JSON body needs a "text" field')
            return str(data["text"])
        return body.decode("utf-8")

    # -- payloads ---------------------------------------------------------------

    def _check_payload(self, word, script) -> dict:
        rt = self.runtime
        verdict = rt.check(word)
        payload = {
            "roman": render(word),
            "kannada": to_kannada(word),
            "script": script,
            "verdict": verdict.kind,
        }
        if verdict.split:
            payload["split"] = split_payload(verdict.split)
        if verdict.analysis:
            payload["analysis"] = analysis_payload(verdict.analysis)
        if not verdict.ok:
            payload["suggestions"] = [suggestion_payload(s)
                                      for s in rt.suggestions(word)]
        return payload

    def _split_payload(self, word, script) -> dict:
        rt = self.runtime
        results = sandhi.split(word, rt.lexicon,
                               spell.suffix_validator(rt.lexicon, rt.markers))
        return {"roman": render(word), "kannada": to_kannada(word),
                "splits": [split_payload(r) for r in results]}

    def _root_payload(self, word, script) -> dict:
        rt = self.runtime
        analysis = morph.analyze(word, rt.lexicon, rt.markers)
        root = morph.extract_root(word, rt.lexicon, rt.markers,
                                  spell.suffix_validator(rt.lexicon, rt.markers))
        payload = {"roman": render(word), "kannada": to_kannada(word),
                   "root": render(root) if root else None}
        if root:
            payload["root_kannada"] = to_kannada(root)
        if analysis:
            payload["analysis"] = analysis_payload(analysis)
        return payload

    # -- static assets ---------------------------------------------------------

    def _serve_static(self, path: str) -> None:
        if path == "/":
            path = "/index.html"
        if self.static_dir:
            safe = os.path.normpath(path).lstrip("/")
            full = os.path.join(self.static_dir, safe)
            if os.path.isfile(full) and os.path.realpath(full).startswith(
                    os.path.realpath(self.static_dir)):
                ext = os.path.splitext(full)[1]
                with open(full, "rb") as fh:
                    body = fh.read()
                self.send_response(200)
                self.send_header("Content-Type",
                                 _CONTENT_TYPES.get(ext, "application/octet-stream"))
                self.send_header("Content-Length", str(len(body)))
                self.end_headers()
                self.wfile.write(body)
                return
        if path == "/index.html":
            self.send_response(200)
            self.send_header("Content-Type", "text/html; charset=utf-8")
            self.send_header("Content-Length", str(len(_FALLBACK_PAGE)))
            self.end_headers()
            self.wfile.write(_FALLBACK_PAGE)
            return
        self._send_error_json(404, "not found: %s" % path)


def make_server(runtime: Runtime, port: int,
                static_dir: Optional[str] = None,
                verbose: bool = False) -> ThreadingHTTPServer:
    handler = type("BoundHandler", (_Handler,),
                   {"runtime": runtime, "static_dir": static_dir})
    server = ThreadingHTTPServer(("127.0.0.1", port), handler)
    server.verbose = verbose  # type: ignore[attr-defined]
    return server


def serve(runtime: Runtime, port: int, static_dir: Optional[str] = None) -> int:
    server = make_server(runtime, port, static_dir, verbose=True)
    print("kanmorph service on http://127.0.0.1:%d/" % server.server_address[1],
          flush=True)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
    return 0
