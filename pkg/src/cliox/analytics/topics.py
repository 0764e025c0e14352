"""Latent topic extraction by collapsed Gibbs sampling.

Symmetric priors (alpha = 50/K, beta = 0.01), seeded initialization, and a
public per-sweep step so callers can assert count conservation between
sweeps.  Sampling order is docs in given order, tokens left to right, which
together with the portable generator makes runs reproducible.
"""

from __future__ import annotations

from ..errors import BadTopicCount, EmptyCorpus
from ..rng import Xoshiro256

BETA = 0.01


class LdaGibbs:
    def __init__(self, token_lists: list[list[str]], n_topics: int, seed: int):
        if n_topics < 1:
            raise BadTopicCount(f"n_topics must be >= 1, got {n_topics}")
        vocab = sorted({t for tokens in token_lists for t in tokens})
        if not vocab:
            raise EmptyCorpus("no tokens survive tokenization")
        self.n_topics = n_topics
        self.alpha = 50.0 / n_topics
        self.beta = BETA
        self.vocab = vocab
        index = {t: i for i, t in enumerate(vocab)}
        self.docs = [[index[t] for t in tokens] for tokens in token_lists]
        self.total_tokens = sum(len(d) for d in self.docs)

        rng = Xoshiro256(seed)
        K, V = n_topics, len(vocab)
        self.topic_word = [[0] * V for _ in range(K)]
        self.doc_topic = [[0] * K for _ in self.docs]
        self.topic_total = [0] * K
        self.z: list[list[int]] = []
        for d, words in enumerate(self.docs):
            zs = []
            for w in words:
                k = rng.randrange(K)
                zs.append(k)
                self.topic_word[k][w] += 1
                self.doc_topic[d][k] += 1
                self.topic_total[k] += 1
            self.z.append(zs)
        self._rng = rng

    def sweep(self) -> None:
        """One full Gibbs pass over every token."""
        K = self.n_topics
        V = len(self.vocab)
        alpha, beta = self.alpha, self.beta
        v_beta = V * beta
        topic_word = self.topic_word
        topic_total = self.topic_total
        rng = self._rng
        weights = [0.0] * K
        for d, words in enumerate(self.docs):
            doc_topic_d = self.doc_topic[d]
            zs = self.z[d]
            for i, w in enumerate(words):
                k_old = zs[i]
                topic_word[k_old][w] -= 1
                doc_topic_d[k_old] -= 1
                topic_total[k_old] -= 1
                for k in range(K):
                    weights[k] = (
                        (topic_word[k][w] + beta)
                        / (topic_total[k] + v_beta)
                        * (doc_topic_d[k] + alpha)
                    )
                k_new = rng.choice_weighted(weights)
                zs[i] = k_new
                topic_word[k_new][w] += 1
                doc_topic_d[k_new] += 1
                topic_total[k_new] += 1

    def run(self, iters: int) -> None:
        for _ in range(iters):
            self.sweep()

    def phi(self) -> list[list[float]]:
        """Topic-term rows, smoothed; each row sums to 1."""
        V = len(self.vocab)
        v_beta = V * self.beta
        return [
            [
                (self.topic_word[k][w] + self.beta) / (self.topic_total[k] + v_beta)
                for w in range(V)
            ]
            for k in range(self.n_topics)
        ]

    def prevalence(self) -> list[float]:
        """Share of tokens per topic; sums to 1."""
        return [self.topic_total[k] / self.total_tokens for k in range(self.n_topics)]

    def top_terms(self, k: int, limit: int = 15) -> list[list]:
        row = self.phi()[k]
        order = sorted(range(len(self.vocab)), key=lambda w: (-row[w], self.vocab[w]))
        return [[self.vocab[w], row[w]] for w in order[:limit]]
