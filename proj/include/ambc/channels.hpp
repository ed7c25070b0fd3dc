#pragma once

#include <optional>
#include <vector>

#include "ambc/core.hpp"
#include "ambc/numbering.hpp"

namespace ambc {

// A channel: maximal-density (n,n)-invariant SE-chain of balls, stored by one
// fundamental-domain ball per translate class, SE-increasing. The row
// residues form a longest antichain of the Shi poset.
struct Channel {
    i64 n = 0;
    std::vector<Cell> generator;  // rows in [1, n], sorted; an SE chain

    i64 density() const { return static_cast<i64>(generator.size()); }
    std::vector<i64> row_residues() const;
    bool contains_class_of_row(i64 row) const;
    // The t-th cell of the channel as an SE chain, t = 0 .. density-1 being
    // the generator.
    Cell cell(i64 t) const;

    friend bool operator==(const Channel&, const Channel&) = default;
};

std::vector<Channel> all_channels(const Window& w);

// Southwest partial ordering: C1 is southwest of C2 when every ball of C1 has
// a ball of C2 weakly northeast of it.
bool sw_leq(const Channel& c1, const Channel& c2);

Channel southwest_channel(const Window& w);
Channel northeast_channel(const Window& w);

// Channel numbering d(b) = max over paths from b to the channel of
// (value at end + length). The anchor assigns the given value to the given
// ball of the channel; by default the generator's first ball gets 1.
Numbering channel_numbering(const Window& w, const Channel& c,
                            std::optional<std::pair<Cell, i64>> anchor = std::nullopt);

Numbering sw_numbering(const Window& w);
Numbering ne_numbering(const Window& w);

// Pseudometric distance between channels: align the two channel numberings on
// c1 and read the (non-negative) difference on c2.
i64 distance(const Window& w, const Channel& c1, const Channel& c2);

// Partition of all channels into classes of pairwise distance zero.
std::vector<std::vector<Channel>> rivers(const Window& w);

struct InterlacingCollections {
    std::vector<Channel> c;  // channels of w, SW-ordered, pairwise disjoint
    std::vector<Channel> d;  // channels of fw(w), d[i] between c[i] and c[i+1]
};

// Maximal disjoint SW-ordered channel collections of w and of the forward
// step of w under the given proper numbering. Throws NotEnoughChannels when
// the Shi poset has fewer than two disjoint maximal antichains.
InterlacingCollections interlacing_collections(const Window& w, const Numbering& numbering);

}  // namespace ambc
