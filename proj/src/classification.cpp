// Copyright 2026 The graphgame Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "graphgame/classification.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "graphgame/classical_solver.hpp"
#include "graphgame/errors.hpp"

namespace graphgame {

std::string_view to_string(Verdict verdict) {
    switch (verdict) {
    case Verdict::QuantumAdvantage:
        return "QuantumAdvantage";
    case Verdict::NoQuantumAdvantage:
        return "NoQuantumAdvantage";
    case Verdict::Trivial:
        return "Trivial";
    case Verdict::NoSharedVertices:
        return "NoSharedVertices";
    case Verdict::Unknown:
        return "Unknown";
    }
    return "Unknown";
}

std::string_view to_string(TupleSemantics semantics) {
    return semantics == TupleSemantics::CommonIntersectionMax
               ? "CommonIntersectionMax"
               : "PairwiseCliqueMax";
}

std::optional<TupleSemantics> parse_semantics(std::string_view text) {
    if (text == "intersection" || text == "CommonIntersectionMax") {
        return TupleSemantics::CommonIntersectionMax;
    }
    if (text == "clique" || text == "PairwiseCliqueMax") {
        return TupleSemantics::PairwiseCliqueMax;
    }
    return std::nullopt;
}

namespace {

void require_constrained_side(const CompiledGame &game, PlayerIndex i) {
    if (i >= game.split()) {
        throw std::out_of_range("player " + std::to_string(i + 1) +
                                " is not among the first m players");
    }
}

// Every input combination of the tuple leaves a common vertex.
bool jointly_shares(const CompiledGame &game, PlayerIndex i,
                    const std::vector<PlayerIndex> &others) {
    const std::size_t width = others.size() + 1;
    for (std::uint32_t combo = 0; combo < (std::uint32_t{1} << width);
         ++combo) {
        auto common = game.owned(i, static_cast<Bit>(combo & 1U));
        for (std::size_t k = 0; k < others.size(); ++k) {
            common &= game.owned(others[k],
                                 static_cast<Bit>((combo >> (k + 1)) & 1U));
        }
        if (common.empty()) {
            return false;
        }
    }
    return true;
}

bool pairwise_clique(const CompiledGame &game,
                     const std::vector<PlayerIndex> &others) {
    for (std::size_t a = 0; a < others.size(); ++a) {
        for (std::size_t b = a + 1; b < others.size(); ++b) {
            if (!game.shares_always(others[a], others[b])) {
                return false;
            }
        }
    }
    return true;
}

// Calls visit(subset) for every k-subset of items until it returns true.
template <class Visit>
bool any_subset(const std::vector<PlayerIndex> &items, std::size_t k,
                Visit &&visit) {
    if (k > items.size()) {
        return false;
    }
    std::vector<std::size_t> idx(k);
    for (std::size_t t = 0; t < k; ++t) {
        idx[t] = t;
    }
    std::vector<PlayerIndex> subset(k);
    while (true) {
        for (std::size_t t = 0; t < k; ++t) {
            subset[t] = items[idx[t]];
        }
        if (visit(subset)) {
            return true;
        }
        // next combination in lexicographic order
        std::size_t t = k;
        while (t > 0 && idx[t - 1] == items.size() - k + t - 1) {
            --t;
        }
        if (t == 0) {
            return false;
        }
        ++idx[t - 1];
        for (std::size_t u = t; u < k; ++u) {
            idx[u] = idx[u - 1] + 1;
        }
    }
}

int max_level(const CompiledGame &game) {
    return static_cast<int>(game.players() - game.split()) + 1;
}

} // namespace

std::vector<PlayerIndex> players_sharing_with(const CompiledGame &game,
                                              PlayerIndex i) {
    require_constrained_side(game, i);
    std::vector<PlayerIndex> out;
    for (PlayerIndex j = game.split(); j < game.players(); ++j) {
        if (game.shares_always(i, j)) {
            out.push_back(j);
        }
    }
    return out;
}

bool tuple_level_nonempty(const CompiledGame &game, PlayerIndex i, int s,
                          TupleSemantics semantics) {
    require_constrained_side(game, i);
    if (s < 2) {
        throw std::invalid_argument("tuple level s must be at least 2");
    }
    const auto neighbors = players_sharing_with(game, i);
    const auto k = static_cast<std::size_t>(s - 1);
    if (semantics == TupleSemantics::CommonIntersectionMax) {
        return any_subset(neighbors, k, [&](const auto &subset) {
            return jointly_shares(game, i, subset);
        });
    }
    // members of A_i already share with i for every input pair
    return any_subset(neighbors, k, [&](const auto &subset) {
        return pairwise_clique(game, subset);
    });
}

std::optional<int> sharing_index(const CompiledGame &game, PlayerIndex i,
                                 TupleSemantics semantics) {
    if (players_sharing_with(game, i).empty()) {
        return std::nullopt;
    }
    int best = 2;
    for (int s = 3; s <= max_level(game); ++s) {
        if (tuple_level_nonempty(game, i, s, semantics)) {
            best = s;
        }
    }
    return best;
}

SharingStructure sharing_structure(const CompiledGame &game,
                                   TupleSemantics semantics) {
    SharingStructure out;
    out.semantics_used = semantics;
    for (PlayerIndex i = 0; i < game.split(); ++i) {
        out.neighbor_sets.push_back(players_sharing_with(game, i));
        std::vector<bool> levels;
        for (int s = 2; s <= max_level(game); ++s) {
            levels.push_back(tuple_level_nonempty(game, i, s, semantics));
        }
        out.tuple_levels.push_back(std::move(levels));
        out.indices.push_back(sharing_index(game, i, semantics));
    }
    return out;
}

Classification classify(const CompiledGame &game,
                        std::optional<double> omega_c,
                        const ClassifyOptions &options) {
    if (game.is_target()) {
        throw UnsupportedGame("classification needs a consistency-mode game");
    }
    Classification out;
    out.indices = sharing_structure(game, options.semantics);

    if (!omega_c) {
        try {
            omega_c = classical_value(game, {.budget = options.budget}).value;
        } catch (const BudgetExceeded &) {
            out.verdict = Verdict::Unknown;
            return out;
        }
    }
    out.classical_value_used = omega_c;

    std::optional<int> min_index;
    for (const auto &index : out.indices.indices) {
        if (index && (!min_index || *index < *min_index)) {
            min_index = index;
        }
    }
    // A sharing index above 2 rules out an advantage whatever omega_c is.
    if (min_index && *min_index > 2) {
        out.verdict = Verdict::NoQuantumAdvantage;
        return out;
    }
    if (std::abs(*omega_c - 1.0) <= 1e-12) {
        out.verdict = Verdict::Trivial;
        return out;
    }

    const bool no_neighbors =
        std::all_of(out.indices.neighbor_sets.begin(),
                    out.indices.neighbor_sets.end(),
                    [](const auto &set) { return set.empty(); });
    bool upper_shares = false;
    for (PlayerIndex j = game.split(); j < game.players(); ++j) {
        for (PlayerIndex k = j + 1; k < game.players(); ++k) {
            upper_shares = upper_shares || game.shares_ever(j, k);
        }
    }
    if (no_neighbors && !upper_shares) {
        out.verdict = Verdict::NoSharedVertices;
        return out;
    }
    out.verdict = min_index ? Verdict::QuantumAdvantage : Verdict::Unknown;
    return out;
}

int independence_number(const CompiledGame &game,
                         std::size_t max_search_players) {
    const auto n = game.players();
    if (n > max_search_players) {
        throw BudgetExceeded("independence search over " + std::to_string(n) +
                                 " players exceeds the budget",
                             static_cast<long double>(n),
                             static_cast<long double>(max_search_players));
    }
    std::vector<std::uint32_t> conflicts(n, 0);
    for (PlayerIndex i = 0; i < n; ++i) {
        for (PlayerIndex j = 0; j < n; ++j) {
            if (i != j && game.shares_ever(i, j)) {
                conflicts[i] |= std::uint32_t{1} << j;
            }
        }
    }
    int best = 0;
    for (std::uint32_t subset = 1; subset < (std::uint32_t{1} << n);
         ++subset) {
        const int size = std::popcount(subset);
        if (size <= best) {
            continue;
        }
        bool independent = true;
        for (PlayerIndex i = 0; i < n && independent; ++i) {
            if ((subset >> i) & 1U) {
                independent = (conflicts[i] & subset) == 0;
            }
        }
        if (independent) {
            best = size;
        }
    }
    return best;
}

} // namespace graphgame
