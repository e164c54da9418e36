#pragma once

// Corpus contexts and small seeded helpers shared by the test binaries.

#include "twistrb/corpus.hpp"
#include "twistrb/sampling.hpp"

#include <string>
#include <utility>
#include <vector>

namespace fixture {

using namespace twistrb;

inline std::vector<std::pair<std::string, TrbContext>> corpus_contexts()
{
    std::vector<std::pair<std::string, TrbContext>> out;
    for (const auto& e : corpus())
        if (e.instance.algebra && e.instance.op)
            out.emplace_back(e.file, instance_context(e.instance));
    return out;
}

inline std::vector<std::pair<std::string, NsAlgebra>> corpus_ns()
{
    std::vector<std::pair<std::string, NsAlgebra>> out;
    for (const auto& e : corpus())
        out.emplace_back(e.file, instance_ns(e.instance));
    return out;
}

/// Corpus contexts plus seeded random valid ones derived from them.
inline std::vector<std::pair<std::string, TrbContext>> valid_contexts(std::uint64_t seed, std::size_t per_base = 2)
{
    auto out = corpus_contexts();
    Sampler s(seed);
    const std::size_t n = out.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < per_base; ++k)
            out.emplace_back(out[i].first + " (random)", random_valid_context(out[i].second, s));
    return out;
}

/// Same context with T replaced.
inline TrbContext with_op(TrbContext ctx, Cochain op)
{
    ctx.op = std::move(op);
    return ctx;
}

} // namespace fixture
