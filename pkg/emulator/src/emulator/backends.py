"""Pluggable text-generation backends.

The stub backend is always available and fully seed-determined, so the
whole pipeline runs without model weights or accelerators. Real models are
an optional path loaded lazily through the transformers library.
"""

from __future__ import annotations

import numpy as np

# small closed vocabulary of common words for deterministic stub output
STUB_VOCAB = (
    "the of and to in a is that for it as was with be by on not he this are "
    "or his from at which but have an had they you were their one all we can "
    "study results method analysis patients treatment effect model data "
    "significant clinical cell protein gene expression increased observed"
).split()


class BackendError(RuntimeError):
    """A backend failed to generate a continuation for one document."""


class StubBackend:
    """Emits seeded random common-word tokens; identical seeds, identical output."""

    name = "stub"
    settings = {"vocabulary_size": len(STUB_VOCAB), "sampling": "uniform-iid"}

    def __init__(self, seed: int):
        self.seed = seed

    def generate(self, doc_index: int, prompt_tokens: list[str], max_new_tokens: int) -> list[str]:
        if max_new_tokens <= 0:
            return []
        rng = np.random.Generator(np.random.PCG64([self.seed, doc_index]))
        picks = rng.integers(0, len(STUB_VOCAB), size=max_new_tokens)
        return [STUB_VOCAB[i] for i in picks]


class TransformersBackend:
    """Causal-LM continuation via the transformers library (optional path).

    Decoding settings are recorded in ``settings`` and written to the run's
    sidecar metadata, since they materially affect vocabulary statistics.
    """

    def __init__(self, model_id: str, seed: int, temperature: float = 1.0, top_p: float = 1.0):
        import torch
        from transformers import AutoModelForCausalLM, AutoTokenizer

        self.name = model_id
        self.settings = {
            "temperature": temperature,
            "top_p": top_p,
            "do_sample": True,
        }
        self._torch = torch
        self.seed = seed
        self.tokenizer = AutoTokenizer.from_pretrained(model_id)
        self.model = AutoModelForCausalLM.from_pretrained(model_id)
        self.model.eval()

    def generate(self, doc_index: int, prompt_tokens: list[str], max_new_tokens: int) -> list[str]:
        if max_new_tokens <= 0:
            return []
        prompt = " ".join(prompt_tokens)
        self._torch.manual_seed(self.seed + doc_index)
        inputs = self.tokenizer(prompt, return_tensors="pt")
        try:
            output = self.model.generate(
                **inputs,
                do_sample=True,
                temperature=self.settings["temperature"],
                top_p=self.settings["top_p"],
                # word-count cap enforced downstream; over-generate in subword space
                max_new_tokens=max_new_tokens * 2,
                pad_token_id=self.tokenizer.eos_token_id,
            )
        except Exception as exc:  # surfaced per document, run continues
            raise BackendError(str(exc)) from exc
        text = self.tokenizer.decode(output[0], skip_special_tokens=True)
        continuation = text[len(prompt) :].split()
        return continuation[:max_new_tokens]


def load_backend(model_id: str, seed: int):
    if model_id == "stub":
        return StubBackend(seed=seed)
    return TransformersBackend(model_id=model_id, seed=seed)
