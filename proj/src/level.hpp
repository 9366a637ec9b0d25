// Level-by-level layout of a biconnected embedded graph inside its outer cycle.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "pagebook/embedder_ops.hpp"

namespace pagebook {

struct LevelOptions {
    bool dfs_ccw_first = true;  // walk anchored trees counterclockwise unless leaves come out unsorted
    bool swap_block_rule = false;  // exchange default and blocked boundary layouts
    bool ip5 = true;
    bool clamp_v1 = true;  // keep anchors of v1 inside the window
};

struct LevelRecord {
    std::vector<int> cycle;     // spine order v1..vk in the level frame
    std::vector<int> interior;
    bool reversed = false;
};

class LevelEmbedder {
public:
    LevelEmbedder(const EmbeddedGraph& g, EmbedStats& stats, LevelOptions opt);

    // Lays out `cycle` (counterclockwise, v1..vk) left to right, then every
    // vertex inside it.
    void run(const std::vector<int>& cycle);

    std::vector<int> order() const;
    const std::map<Edge, int>& proposals() const { return proposals_; }
    const std::vector<LevelRecord>& records() const { return records_; }
    // Why each edge got its proposal: "path", "closing", "chord", "case<N>"
    // or "bridge", suffixed with the level depth.
    const std::map<Edge, std::string>& origins() const { return origins_; }

private:
    void process(CycleContext ctx);
    void propose(int u, int v, int page, const std::string& why, int depth);
    std::vector<long> window_positions(const CycleContext& ctx) const;

    const EmbeddedGraph& g_;
    EmbeddedGraph mirror_;  // g with every rotation reversed
    EmbedStats& stats_;
    LevelOptions opt_;
    Spine spine_;
    std::map<Edge, int> proposals_;
    std::map<Edge, std::string> origins_;
    std::vector<LevelRecord> records_;
    std::vector<CycleContext> work_;
};

}  // namespace pagebook
