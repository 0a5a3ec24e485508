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

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace graphgame {

/// Fixed-universe bitset over vertex indices.
class VertexSet {
  public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe)
        : universe_(universe), words_((universe + 63) / 64, 0) {}

    void insert(std::size_t v) { words_[v / 64] |= word(v); }
    [[nodiscard]] bool contains(std::size_t v) const {
        return (words_[v / 64] & word(v)) != 0;
    }

    [[nodiscard]] bool empty() const {
        for (auto w : words_) {
            if (w != 0) {
                return false;
            }
        }
        return true;
    }

    [[nodiscard]] std::size_t size() const {
        std::size_t count = 0;
        for (auto w : words_) {
            count += static_cast<std::size_t>(std::popcount(w));
        }
        return count;
    }

    [[nodiscard]] std::size_t universe() const { return universe_; }

    VertexSet &operator&=(const VertexSet &other) {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            words_[k] &= other.words_[k];
        }
        return *this;
    }
    [[nodiscard]] friend VertexSet operator&(VertexSet a, const VertexSet &b) {
        a &= b;
        return a;
    }

    [[nodiscard]] bool intersects(const VertexSet &other) const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            if ((words_[k] & other.words_[k]) != 0) {
                return true;
            }
        }
        return false;
    }

    /// Members in increasing index order.
    [[nodiscard]] std::vector<std::size_t> members() const {
        std::vector<std::size_t> out;
        for (std::size_t k = 0; k < words_.size(); ++k) {
            auto w = words_[k];
            while (w != 0) {
                out.push_back(k * 64 +
                              static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
        return out;
    }

    friend bool operator==(const VertexSet &, const VertexSet &) = default;

  private:
    static std::uint64_t word(std::size_t v) {
        return std::uint64_t{1} << (v % 64);
    }

    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace graphgame
