"""Command-line front end.

Subcommands: check, split, join, root, interactive, serve, stats, rules.
Exit codes: 0 all good, 1 at least one misspelt word / empty result,
2 usage or configuration error.  Every flag has a KANMORPH_* environment
variable fallback.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from . import morph, sandhi, spell
from .lexicon import trie_state_count
from .runtime import (Config, ConfigError, Runtime, analysis_payload,
                      split_payload, suggestion_payload)
from .translit import InvalidRomanInput, UnmappableCodepoint, render, to_kannada

USAGE_ERROR = 2


def _env(name: str, fallback: Optional[str] = None) -> Optional[str]:
    return os.environ.get("KANMORPH_" + name, fallback)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kanmorph",
        description="Kannada spell checking, sandhi splitting and root extraction",
    )
    parser.add_argument("--lexicon", default=_env("LEXICON"),
                        help="base lexicon file (one romanized word per line)")
    parser.add_argument("--user-lexicon", default=_env("USER_LEXICON"),
                        help="user lexicon file (appended to by add-word)")
    parser.add_argument("--markers", default=_env("MARKERS"),
                        help="inflection marker file")
    parser.add_argument("--memory", default=_env("MEMORY"),
                        help="suggestion memory file")
    parser.add_argument("--cache", default=_env("CACHE"),
                        help="compiled automaton cache file")
    parser.add_argument("--script", default=_env("SCRIPT", "auto"),
                        choices=("auto", "kannada", "roman"),
                        help="how to read input words (default: per-word autodetect)")
    parser.add_argument("--format", default=_env("FORMAT", "text"),
                        choices=("text", "json"), dest="output_format")

    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="spell-check words or a corpus file")
    p_check.add_argument("words", nargs="*")
    p_check.add_argument("--file", help="check every word token in a text file")

    p_split = sub.add_parser("split", help="split a sandhi word")
    p_split.add_argument("word")

    p_join = sub.add_parser("join", help="join two words by sandhi")
    p_join.add_argument("prefix")
    p_join.add_argument("suffix")
    p_join.add_argument("--rule", choices=sandhi.RULES)

    p_root = sub.add_parser("root", help="extract the root of an inflected word")
    p_root.add_argument("word")

    p_inter = sub.add_parser("interactive", help="walk a file's misspellings")
    p_inter.add_argument("file")
    p_inter.add_argument("--output", help="corrected output path (default FILE.corrected)")

    p_serve = sub.add_parser("serve", help="run the local HTTP/JSON service")
    p_serve.add_argument("--port", type=int,
                         default=int(_env("PORT", "8765")))
    p_serve.add_argument("--static", default=_env("STATIC"),
                         help="directory of web UI assets to serve at /")

    sub.add_parser("stats", help="lexicon size and automaton/trie comparison")
    sub.add_parser("rules", help="dump the frozen sandhi rule table")
    return parser


def make_runtime(args: argparse.Namespace) -> Runtime:
    config = Config(script=args.script, output_format=args.output_format)
    if args.lexicon:
        config.lexicon_path = args.lexicon
    if args.user_lexicon:
        config.user_lexicon_path = args.user_lexicon
    if args.markers:
        config.markers_path = args.markers
    if args.memory:
        config.memory_path = args.memory
    if args.cache:
        config.cache_path = args.cache
    return Runtime(config)


def _emit(payload, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, ensure_ascii=False, indent=2))


def _verdict_text(rt: Runtime, word, script: str) -> tuple[str, list]:
    verdict = rt.check(word)
    if verdict.kind == spell.CORRECT:
        return "correct", []
    if verdict.kind == spell.CORRECT_INFLECTED:
        parts = ", ".join("%s/%s" % (render(i.form), i.category)
                          for i in reversed(verdict.analysis.stripped))
        return "correct (inflected: %s [%s])" % (
            rt.display(verdict.analysis.root, script), parts), []
    if verdict.kind == spell.CORRECT_SANDHI:
        s = verdict.split
        return "correct (sandhi: %s: %s + %s)" % (
            s.rule, rt.display(s.prefix, script), rt.display(s.suffix, script)), []
    return "misspelt", rt.suggestions(word)


def cmd_check(rt: Runtime, args) -> int:
    if args.file:
        with open(args.file, encoding="utf-8") as fh:
            report = rt.corpus_report(fh.read())
        if rt.config.output_format == "json":
            _emit(report, "json")
        else:
            for token in report["tokens"]:
                line = "%s: %s" % (token["raw"], token["verdict"])
                if token.get("error"):
                    line += " (%s)" % token["error"]
                print(line)
                for sug in token.get("suggestions", []):
                    print("  %d. %s (%s)" % (sug["rank"] + 1, sug["roman"],
                                             sug["provenance"]))
            c = report["counts"]
            print("total %d: %d correct, %d inflected, %d sandhi, %d misspelt"
                  % (c["total"], c["correct"], c["inflected"], c["sandhi"],
                     c["misspelt"]))
        return 1 if report["counts"]["misspelt"] else 0
    if not args.words:
        print("check: give words or --file", file=sys.stderr)
        return USAGE_ERROR
    records = []
    any_misspelt = False
    for raw in args.words:
        word, script = rt.parse_word(raw)
        verdict = rt.check(word)
        text, suggestions = _verdict_text(rt, word, script)
        if verdict.kind == spell.MISSPELT:
            any_misspelt = True
        if rt.config.output_format == "json":
            record = {"word": raw, "roman": render(word),
                      "kannada": to_kannada(word), "verdict": verdict.kind}
            if verdict.split:
                record["split"] = split_payload(verdict.split)
            if verdict.analysis:
                record["analysis"] = analysis_payload(verdict.analysis)
            if suggestions:
                record["suggestions"] = [suggestion_payload(s) for s in suggestions]
            records.append(record)
        else:
            print("%s: %s" % (raw, text))
            for sug in suggestions:
                print("  %d. %s (%s)" % (sug.rank + 1, rt.display(sug.candidate, script),
                                         sug.provenance))
    _emit(records, rt.config.output_format)
    return 1 if any_misspelt else 0


def cmd_split(rt: Runtime, args) -> int:
    word, script = rt.parse_word(args.word)
    results = sandhi.split(word, rt.lexicon,
                           spell.suffix_validator(rt.lexicon, rt.markers))
    if rt.config.output_format == "json":
        _emit([split_payload(r) for r in results], "json")
    else:
        for r in results:
            print("%s + %s [%s]" % (rt.display(r.prefix, script),
                                    rt.display(r.suffix, script), r.rule))
        if not results:
            print("no sandhi found")
    return 0 if results else 1


def cmd_join(rt: Runtime, args) -> int:
    prefix, script = rt.parse_word(args.prefix)
    suffix, _ = rt.parse_word(args.suffix)
    try:
        outputs = sandhi.join(prefix, suffix, args.rule)
    except sandhi.RuleNotApplicable as exc:
        print(str(exc), file=sys.stderr)
        return 1
    if rt.config.output_format == "json":
        _emit([{"roman": render(w), "kannada": to_kannada(w), "rule": r}
               for w, r in outputs], "json")
    else:
        for w, r in outputs:
            print("%s [%s]" % (rt.display(w, script), r))
        if not outputs:
            print("no rule applies")
    return 0 if outputs else 1


def cmd_root(rt: Runtime, args) -> int:
    word, script = rt.parse_word(args.word)
    analysis = morph.analyze(word, rt.lexicon, rt.markers)
    root = morph.extract_root(word, rt.lexicon, rt.markers,
                              spell.suffix_validator(rt.lexicon, rt.markers))
    if rt.config.output_format == "json":
        payload = {"word": args.word, "root": render(root) if root else None}
        if root:
            payload["kannada"] = to_kannada(root)
        if analysis:
            payload["analysis"] = analysis_payload(analysis)
        _emit(payload, "json")
    else:
        if root is None:
            print("no root found")
        elif analysis:
            parts = ", ".join("%s/%s" % (render(i.form), i.category)
                              for i in reversed(analysis.stripped))
            print("%s [%s]" % (rt.display(root, script), parts))
        else:
            print(rt.display(root, script))
    return 0 if root is not None else 1


def cmd_interactive(rt: Runtime, args) -> int:
    with open(args.file, encoding="utf-8") as fh:
        text = fh.read()
    report = rt.corpus_report(text)
    corrected = text
    # apply picks right to left so earlier spans stay valid
    edits: list[tuple[int, int, str]] = []
    for token in report["tokens"]:
        if token["verdict"] != "misspelt" or token.get("error"):
            continue
        print("\n%s (misspelt)" % token["raw"])
        suggestions = token.get("suggestions", [])
        for sug in suggestions:
            shown = sug["kannada"] if token["script"] == "kannada" else sug["roman"]
            print("  %d. %s (%s)" % (sug["rank"] + 1, shown, sug["provenance"]))
        try:
            reply = input("pick number, (s)kip, (a)dd to lexicon, (q)uit: ").strip()
        except EOFError:
            reply = "q"
        if reply == "q":
            break
        if reply == "a":
            word, _ = rt.parse_word(token["raw"])
            rt.add_word(word)
            print("added %s" % token["raw"])
            continue
        if reply.isdigit() and suggestions:
            index = int(reply) - 1
            if 0 <= index < len(suggestions):
                sug = suggestions[index]
                word, _ = rt.parse_word(token["raw"])
                chosen = sug["kannada"] if token["script"] == "kannada" else sug["roman"]
                rt.record_choice(word, rt.parse_word(chosen)[0])
                edits.append((token["start"], token["end"], chosen))
                print("replaced with %s" % chosen)
    for start, end, replacement in sorted(edits, reverse=True):
        corrected = corrected[:start] + replacement + corrected[end:]
    out_path = args.output or args.file + ".corrected"
    with open(out_path, "w", encoding="utf-8") as fh:
        fh.write(corrected)
    print("\nwrote %s" % out_path)
    return 0


def cmd_stats(rt: Runtime, args) -> int:
    words = list(rt.lexicon.iter_words())
    word_count, fwd_states, rev_states = rt.lexicon.stats()
    trie_states = trie_state_count(words)
    ratio = trie_states / fwd_states if fwd_states else 0.0
    if rt.config.output_format == "json":
        _emit({"word_count": word_count, "forward_states": fwd_states,
               "reverse_states": rev_states, "trie_states": trie_states,
               "trie_to_automaton_ratio": round(ratio, 3)}, "json")
    else:
        print("words: %d" % word_count)
        print("automaton states: %d forward, %d reverse" % (fwd_states, rev_states))
        print("trie states: %d (%.2fx the automaton)" % (trie_states, ratio))
    return 0


def cmd_rules(rt: Runtime, args) -> int:
    for row in sandhi.rule_table():
        print("\t".join(row))
    return 0


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        rt = make_runtime(args)
    except (ConfigError, OSError, ValueError) as exc:
        print("kanmorph: %s" % exc, file=sys.stderr)
        return USAGE_ERROR
    try:
        if args.command == "check":
            return cmd_check(rt, args)
        if args.command == "split":
            return cmd_split(rt, args)
        if args.command == "join":
            return cmd_join(rt, args)
        if args.command == "root":
            return cmd_root(rt, args)
        if args.command == "interactive":
            return cmd_interactive(rt, args)
        if args.command == "serve":
            from .service import serve
            return serve(rt, args.port, args.static)
        if args.command == "stats":
            return cmd_stats(rt, args)
        if args.command == "rules":
            return cmd_rules(rt, args)
    except (UnmappableCodepoint, InvalidRomanInput) as exc:
        print("kanmorph: %s" % exc, file=sys.stderr)
        return USAGE_ERROR
    except OSError as exc:
        print("kanmorph: %s" % exc, file=sys.stderr)
        return 1
    parser.error("unknown command")
    return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
