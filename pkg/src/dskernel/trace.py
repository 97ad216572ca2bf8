"""Audit log of rule firings, detailed enough to replay a reduction run."""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Color, ColoredGraph


@dataclass(frozen=True)
class TraceEntry:
    """One rule firing: what was read and exactly what changed.

    ``recolored`` holds ``(vertex, old, new)`` color letters, ``added`` holds
    ``(vertex, color, neighbor_ids)`` for gadget vertices.  Mutations replay
    in order: recolor, delete, add.
    """

    rule: str
    read: tuple[int, ...] = ()
    recolored: tuple[tuple[int, str, str], ...] = ()
    deleted: tuple[int, ...] = ()
    added: tuple[tuple[int, str, tuple[int, ...]], ...] = ()
    note: str = ""

    def format(self) -> str:
        parts = [f"rule {self.rule}"]
        if self.read:
            parts.append("read=" + ",".join(map(str, self.read)))
        if self.recolored:
            parts.append(
                "recolor=" + ",".join(f"{v}:{old}>{new}" for v, old, new in self.recolored)
            )
        if self.deleted:
            parts.append("delete=" + ",".join(map(str, self.deleted)))
        if self.added:
            parts.append(
                "add="
                + ",".join(
                    f"{v}:{c}:" + "|".join(map(str, nbrs)) for v, c, nbrs in self.added
                )
            )
        if self.note:
            parts.append(f"note={self.note}")
        return " ".join(parts)


@dataclass
class RuleTrace:
    entries: list[TraceEntry] = field(default_factory=list)

    def append(self, entry: TraceEntry) -> None:
        self.entries.append(entry)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def format_lines(self) -> list[str]:
        return [entry.format() for entry in self.entries]

    def replay(self, g: ColoredGraph) -> ColoredGraph:
        """Apply the recorded mutations to a copy of ``g``.

        Gadget ids are checked against the fresh-id counter, so a successful
        replay certifies the trace is faithful to the recorded run.
        """
        work = g.copy()
        for entry in self.entries:
            for v, old, new in entry.recolored:
                assert work.color(v) is Color.from_letter(old), (
                    f"replay mismatch at {entry.format()}: vertex {v} is "
                    f"{work.color(v).value}, expected {old}"
                )
                work.set_color(v, Color.from_letter(new))
            for v in entry.deleted:
                work.delete_vertex(v)
            for v, c, nbrs in entry.added:
                created = work.add_vertex(Color.from_letter(c))
                assert created == v, (
                    f"replay mismatch at {entry.format()}: fresh id {created}, "
                    f"expected {v}"
                )
                for u in nbrs:
                    work.add_edge(created, u)
        return work
