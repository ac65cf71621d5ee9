"""Independent reference implementations used to cross-check the package.

Everything here is written from the definitions with plain loops and its
own arithmetic; nothing calls into lexsumm except to reuse its data types
as inputs.  Keep these slow and obvious.
"""

from __future__ import annotations

import math

import numpy as np


# --------------------------------------------------------------------------
# n-gram overlap and LCS


def ngram_counts(tokens, n):
    counts = {}
    for i in range(len(tokens) - n + 1):
        gram = tuple(tokens[i : i + n])
        counts[gram] = counts.get(gram, 0) + 1
    return counts


def ngram_overlap(candidate, reference, n):
    """(clipped matches, candidate n-grams, reference n-grams)."""
    cand = ngram_counts(candidate, n)
    ref = ngram_counts(reference, n)
    matches = 0
    for gram, count in cand.items():
        if gram in ref:
            matches += min(count, ref[gram])
    return matches, sum(cand.values()), sum(ref.values())


def lcs_table(a, b):
    """Full quadratic dynamic-programming table; returns the LCS length."""
    rows = len(a) + 1
    cols = len(b) + 1
    table = [[0] * cols for _ in range(rows)]
    for i in range(1, rows):
        for j in range(1, cols):
            if a[i - 1] == b[j - 1]:
                table[i][j] = table[i - 1][j - 1] + 1
            else:
                table[i][j] = max(table[i - 1][j], table[i][j - 1])
    return table[-1][-1]


def prf(matches, candidate_total, reference_total):
    recall = matches / reference_total if reference_total else 0.0
    precision = matches / candidate_total if candidate_total else 0.0
    f1 = 2 * precision * recall / (precision + recall) if precision + recall else 0.0
    return recall, precision, f1


def rouge_n_triple(candidate, reference, n):
    return prf(*ngram_overlap(candidate, reference, n))


def rouge_l_triple(candidate, reference):
    return prf(lcs_table(candidate, reference), len(candidate), len(reference))


def mean_rouge(candidate, reference, component=2):
    """Mean of the 1-gram, 2-gram, and LCS triples' chosen component
    (0 recall, 1 precision, 2 F1)."""
    values = [rouge_n_triple(candidate, reference, 1)[component],
              rouge_n_triple(candidate, reference, 2)[component],
              rouge_l_triple(candidate, reference)[component]]
    return sum(values) / 3.0


# --------------------------------------------------------------------------
# term statistics and vectors, recomputed from scratch


def term_stats(token_lists):
    df = {}
    cf = {}
    for tokens in token_lists:
        for term in set(tokens):
            df[term] = df.get(term, 0) + 1
        for term in tokens:
            cf[term] = cf.get(term, 0) + 1
    return len(token_lists), df, cf


def tfidf(tokens, n_docs, df, stopwords=frozenset()):
    tf = {}
    for term in tokens:
        if term not in stopwords:
            tf[term] = tf.get(term, 0) + 1
    vector = {}
    for term, count in tf.items():
        weight = count * math.log((n_docs + 1) / (df.get(term, 0) + 1))
        if weight != 0.0:
            vector[term] = weight
    return vector


def sparse_cosine(u, v):
    dot = 0.0
    for term, weight in u.items():
        if term in v:
            dot += weight * v[term]
    nu = math.sqrt(sum(w * w for w in u.values()))
    nv = math.sqrt(sum(w * w for w in v.values()))
    if nu == 0.0 or nv == 0.0:
        return 0.0
    return dot / (nu * nv)


# --------------------------------------------------------------------------
# stationary distribution via eigendecomposition


def stationary_distribution(matrix):
    """Left eigenvector of a row-stochastic matrix for eigenvalue 1,
    normalized to sum 1, via dense eigendecomposition."""
    values, vectors = np.linalg.eig(matrix.T)
    index = int(np.argmin(np.abs(values - 1.0)))
    vector = np.real(vectors[:, index])
    total = vector.sum()
    return vector / total


def lexrank_transition(token_lists, n_docs, df, stopwords,
                       threshold=0.1, damping=0.85):
    """Walk matrix rebuilt from scratch: thresholded TF-IDF cosine graph,
    dangling rows uniform, damped teleport."""
    vectors = [tfidf(tokens, n_docs, df, stopwords) for tokens in token_lists]
    n = len(vectors)
    adjacency = np.zeros((n, n))
    for i in range(n):
        for j in range(n):
            if sparse_cosine(vectors[i], vectors[j]) >= threshold:
                adjacency[i, j] = 1.0
    transitions = np.zeros((n, n))
    for i in range(n):
        total = adjacency[i].sum()
        if total == 0:
            transitions[i] = 1.0 / n
        else:
            transitions[i] = adjacency[i] / total
    return damping * transitions + (1.0 - damping) / n


# --------------------------------------------------------------------------
# greedy traces


def mmr_trace(token_lists, all_tokens, n_docs, df, stopwords, lam,
              budget=None, word_counts=None, paper_sign=False):
    """Greedy maximal-marginal-relevance selection order, brute force."""
    vectors = [tfidf(tokens, n_docs, df, stopwords) for tokens in token_lists]
    doc_vector = tfidf(all_tokens, n_docs, df, stopwords)
    relevance = [sparse_cosine(v, doc_vector) for v in vectors]
    sign = 1.0 if paper_sign else -1.0
    selected = []
    used = 0
    while len(selected) < len(vectors):
        best = None
        best_value = None
        for i in range(len(vectors)):
            if i in selected:
                continue
            redundancy = 0.0
            for j in selected:
                redundancy = max(redundancy, sparse_cosine(vectors[i], vectors[j]))
            value = lam * relevance[i] + sign * (1.0 - lam) * redundancy
            if best_value is None or value > best_value:
                best_value = value
                best = i
        if budget is not None:
            if used + word_counts[best] > budget:
                break
            used += word_counts[best]
        selected.append(best)
    return selected


def dsdr_reconstruction_error(rows, basis, ridge):
    """Total ridge reconstruction error of every row given a basis, solved
    through the augmented least-squares system (not the normal equations)."""
    basis_matrix = np.asarray([rows[i] for i in basis], dtype=float)
    k = len(basis)
    augmented = np.vstack([basis_matrix.T, math.sqrt(ridge) * np.eye(k)]) \
        if ridge > 0 else basis_matrix.T
    total = 0.0
    for row in rows:
        target = np.concatenate([row, np.zeros(k)]) if ridge > 0 else np.asarray(row)
        coef, *_ = np.linalg.lstsq(augmented, target, rcond=None)
        residual = row - basis_matrix.T @ coef
        total += float(residual @ residual) + ridge * float(coef @ coef)
    return total


def dsdr_trace(rows, ridge, budget=None, word_counts=None):
    """Greedy reconstruction selection order, brute force."""
    n = len(rows)
    selected = []
    used = 0
    while len(selected) < n:
        best = None
        best_error = None
        for i in range(n):
            if i in selected:
                continue
            error = dsdr_reconstruction_error(rows, selected + [i], ridge)
            if best_error is None or error < best_error - 1e-12:
                best_error = error
                best = i
        if budget is not None:
            if used + word_counts[best] > budget:
                break
            used += word_counts[best]
        selected.append(best)
    return selected


# --------------------------------------------------------------------------
# label generators, full-matrix style


def avr_labels(doc_token_lists, ref_token_lists, k=3, component=2):
    labels = [0] * len(doc_token_lists)
    for ref_tokens in ref_token_lists:
        scores = [mean_rouge(tokens, ref_tokens, component)
                  for tokens in doc_token_lists]
        order = sorted(range(len(scores)), key=lambda i: (-scores[i], i))
        for index in order[:k]:
            labels[index] = 1
    return labels


def maximal_labels(doc_token_lists, ref_tokens, component=2):
    selected = []
    current = 0.0
    n = len(doc_token_lists)
    while len(selected) < n:
        best = -1
        best_score = current
        for i in range(n):
            if i in selected:
                continue
            candidate = []
            for index in sorted(selected + [i]):
                candidate.extend(doc_token_lists[index])
            score = mean_rouge(candidate, ref_tokens, component)
            if score > best_score:
                best_score = score
                best = i
        if best < 0:
            break
        selected.append(best)
        current = best_score
    labels = [0] * n
    for index in selected:
        labels[index] = 1
    return labels


def tfidf_labels(doc_token_lists, ref_token_lists, n_docs, df,
                 stopwords=frozenset(), k=3, theta=0.4):
    vectors = [tfidf(tokens, n_docs, df, stopwords) for tokens in doc_token_lists]
    labels = [0] * len(doc_token_lists)
    for ref_tokens in ref_token_lists:
        ref_vector = tfidf(ref_tokens, n_docs, df, stopwords)
        sims = [sparse_cosine(v, ref_vector) for v in vectors]
        qualified = sorted((i for i in range(len(sims)) if sims[i] > theta),
                           key=lambda i: (-sims[i], i))
        for index in qualified[:k]:
            labels[index] = 1
    return labels
