import hashlib
import json
from typing import Dict, Type


def get_id_for_object(obj):
    serialized = json.dumps(obj, sort_keys=True)
    return hashlib.sha256(serialized.encode("utf-8")).hexdigest()


def short_id_of(text: str) -> int:
    """Stable 64-bit integer for a string, used to key random streams."""
    return int.from_bytes(hashlib.sha256(text.encode("utf-8")).digest()[:8], "big")


class Reference:
    """Serializable pointer from which a Configuration can be rebuilt."""

    def __init__(self, **data):
        self.data = data
        self.id = get_id_for_object(self.data)
        self.type = self.__class__.__name__

    def replay(self):
        raise NotImplementedError(f"{self.__class__}.replay")

    def to_dict(self):
        return {
            "id": self.id,
            "type": self.type,
            "data": self.data,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def subclass_lookup(cls) -> Dict[str, Type["Reference"]]:
        subclasses = {}
        for subclass in cls.__subclasses__():
            subclasses[subclass.__name__] = subclass
            subclasses.update(subclass.subclass_lookup())
        return subclasses

    @classmethod
    def from_dict(cls, data):
        subclass = cls.subclass_lookup()[data["type"]]
        new_obj = subclass(**data["data"])
        assert new_obj.id == data["id"]
        return new_obj

    @classmethod
    def from_json(cls, json_str):
        return cls.from_dict(json.loads(json_str))

    def __eq__(self, other):
        return isinstance(other, Reference) and other.id == self.id

    def __hash__(self):
        return hash(self.id)

    def __repr__(self):
        return f"{self.type}({self.data})"


class GeneratedCell(Reference):
    """A generated instance, replayable from (seed, index, mode, flavor) alone."""

    def __init__(self, seed, index, mode, flavor, bound=20):
        super().__init__(seed=seed, index=index, mode=mode, flavor=flavor, bound=bound)

    def spec(self):
        from .generators import GeneratorSpec

        d = self.data
        return GeneratorSpec(seed=d["seed"], count=d["index"] + 1, bound=d["bound"], mode=d["mode"], flavor=d["flavor"])

    def replay(self):
        from .generators import generate

        return generate(self.spec(), self.data["index"])


class InlineConfiguration(Reference):
    """A configuration given explicitly: triangle vertices and [u, v] trace pairs as p/q strings."""

    def __init__(self, triangle, traces, mode="isogonal", second_traces=None):
        super().__init__(triangle=triangle, traces=traces, mode=mode, second_traces=second_traces)

    def replay(self):
        from .core import Mode, build_configuration
        from .triangle import TraceSet, Triangle

        d = self.data
        tri = Triangle.from_points([[parse_rational(c) for c in v] for v in d["triangle"]])
        traces = TraceSet.from_pairs([[parse_rational(c) for c in p] for p in d["traces"]])
        second = None
        if d["second_traces"] is not None:
            second = TraceSet.from_pairs([[parse_rational(c) for c in p] for p in d["second_traces"]])
        return build_configuration(tri, traces, Mode.parse(d["mode"], second))


def parse_rational(text):
    """Parse 'p/q' or an integer string (ints pass through) into a Fraction."""
    from fractions import Fraction

    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise ValueError(f"expected a p/q string, got {text!r}")
    num, sep, den = text.strip().partition("/")
    try:
        n = int(num)
        d = int(den) if sep else 1
    except ValueError:
        raise ValueError(f"malformed rational {text!r}") from None
    if d == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(n, d)
