#include "pagebook/embedder.hpp"

#include <algorithm>
#include <sstream>

#include "level.hpp"
#include "pagebook/embedder_ops.hpp"
#include "pagebook/verifier.hpp"

namespace pagebook {

void EmbedStats::merge(const EmbedStats& o) {
    for (size_t i = 0; i < cases.size(); ++i) cases[i] += o.cases[i];
    for (size_t i = 0; i < ip4_case.size(); ++i) ip4_case[i] += o.ip4_case[i];
    levels += o.levels;
    max_depth = std::max(max_depth, o.max_depth);
    ip4_repairs += o.ip4_repairs;
    ip5_repairs += o.ip5_repairs;
    ip5_skipped += o.ip5_skipped;
    double_blocked += o.double_blocked;
    blocked_anchors += o.blocked_anchors;
    tangency_subcycles += o.tangency_subcycles;
    relocations += o.relocations;
    clamps += o.clamps;
    ip4_inner_fallbacks += o.ip4_inner_fallbacks;
    dfs_mirrored += o.dfs_mirrored;
    dfs_unsorted += o.dfs_unsorted;
    page_conflicts += o.page_conflicts;
    page_changes += o.page_changes;
    page_search_nodes += o.page_search_nodes;
    attempts = std::max(attempts, o.attempts);
    rejected_attempts += o.rejected_attempts;
    merge_checks(o);
}

void EmbedStats::merge_checks(const EmbedStats& o) {
    aux_checks += o.aux_checks;
    aux_failures += o.aux_failures;
    sandwich_checks += o.sandwich_checks;
    sandwich_failures += o.sandwich_failures;
    window_checks += o.window_checks;
    window_failures += o.window_failures;
    ip3_checks += o.ip3_checks;
    ip3_failures += o.ip3_failures;
    forest_checks += o.forest_checks;
    forest_failures += o.forest_failures;
}

std::string EmbedStats::summary() const {
    std::ostringstream out;
    out << "cases: 1=" << cases[1] << " 2=" << cases[2] << " 3=" << cases[3] << " 4=" << cases[4] << '\n';
    out << "levels: " << levels << " max_depth: " << max_depth << '\n';
    out << "ip4_repairs: " << ip4_repairs << " (case0=" << ip4_case[0] << " case1=" << ip4_case[1]
        << " case2=" << ip4_case[2] << " case3=" << ip4_case[3] << " case4=" << ip4_case[4] << ")\n";
    out << "ip5_repairs: " << ip5_repairs << " ip5_skipped: " << ip5_skipped << '\n';
    out << "blocked_anchors: " << blocked_anchors << " double_blocked: " << double_blocked
        << " tangency_subcycles: " << tangency_subcycles << '\n';
    out << "clamps: " << clamps << " inner_vk_fallbacks: " << ip4_inner_fallbacks << " dfs_mirrored: " << dfs_mirrored
        << " dfs_unsorted: " << dfs_unsorted << '\n';
    out << "page_conflicts: " << page_conflicts << " page_changes: " << page_changes
        << " page_search_nodes: " << page_search_nodes << " attempts: " << attempts
        << " rejected: " << rejected_attempts << '\n';
    out << "checks: aux " << aux_failures << '/' << aux_checks << " sandwich " << sandwich_failures << '/'
        << sandwich_checks << " window " << window_failures << '/' << window_checks << " ip3 " << ip3_failures << '/'
        << ip3_checks << " forest " << forest_failures << '/' << forest_checks << '\n';
    return out.str();
}

namespace {

constexpr std::uint64_t kPageSearchBudget = 200'000;
constexpr int kMaxAttempts = 400;

struct LocalBook {
    std::vector<int> order;
    std::map<Edge, int> pages;
};

// Checks cycle order and window containment of every recorded level
// against the final spine.
void check_records(const std::vector<LevelRecord>& records, const std::vector<int>& order, EmbedStats& stats) {
    std::vector<long> pos(order.size() + 8, -1);
    for (size_t i = 0; i < order.size(); ++i)
        if (order[i] < static_cast<int>(pos.size())) pos[order[i]] = static_cast<long>(i);
    for (const auto& r : records) {
        auto vp = [&](int v) { return r.reversed ? -pos[v] : pos[v]; };
        ++stats.ip3_checks;
        bool increasing = true;
        for (size_t i = 1; i < r.cycle.size(); ++i)
            if (vp(r.cycle[i]) <= vp(r.cycle[i - 1])) increasing = false;
        if (!increasing) ++stats.ip3_failures;
    }
}

LocalBook complete(const EmbeddedGraph& g, const std::vector<int>& order, const std::map<Edge, int>& proposals,
                   EmbedStats& stats) {
    std::vector<int> pos(static_cast<size_t>(g.n()), -1);
    for (size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
    const auto edges = g.edges();
    std::vector<int> proposal(edges.size(), 1);
    for (size_t i = 0; i < edges.size(); ++i) {
        auto it = proposals.find(edges[i]);
        if (it != proposals.end()) proposal[i] = it->second;
    }
    PageSearchResult res = complete_pages(pos, edges, proposal, 3, kPageSearchBudget);
    stats.page_conflicts += res.conflicts;
    stats.page_search_nodes += res.nodes;
    if (!res.ok)
        throw EmbedError("no crossing-free three-page assignment for the spine order (" +
                         std::to_string(res.conflicts) + " proposed conflicts)");
    stats.page_changes += res.changed;
    LocalBook out;
    out.order = order;
    for (size_t i = 0; i < edges.size(); ++i) out.pages[edges[i]] = res.pages[i];
    return out;
}

// One layout attempt: `outer` is the counterclockwise outer cycle and
// vk_index picks v_k on it, or -1 to augment the graph first.
LocalBook embed_biconnected_once(const EmbeddedGraph& g, std::vector<int> cycle, int vk_index,
                                 const LevelOptions& opt, EmbedStats& stats) {
    const long k = static_cast<long>(cycle.size());
    if (vk_index >= 0) {
        std::rotate(cycle.begin(), cycle.begin() + (vk_index + 1) % k, cycle.end());
        LevelEmbedder lev(g, stats, opt);
        lev.run(cycle);
        auto order = lev.order();
        check_records(lev.records(), order, stats);
        return complete(g, order, lev.proposals(), stats);
    }
    Ip4Augmentation aug = ensure_ip4(g, cycle);
    ++stats.ip4_repairs;
    ++stats.ip4_case[aug.proof_case];
    LevelEmbedder lev(aug.augmented, stats, opt);
    lev.run(aug.outer_cycle);
    auto order = lev.order();
    check_records(lev.records(), order, stats);
    BookEmbedding ab;
    ab.order = order;
    ab.pages = lev.proposals();
    BookEmbedding contracted = contract_ip4(aug, ab);
    return complete(g, contracted.order, contracted.pages, stats);
}

// Candidate v_k positions on a face: vertices of degree <= 4 whose
// successor satisfies IP-5 first, then by vertex id. Empty when every
// vertex has degree 5.
std::vector<int> vk_candidates(const EmbeddedGraph& g, const std::vector<int>& face) {
    const CycleContext top = make_cycle_context(g, face);
    const size_t k = face.size();
    std::vector<std::pair<std::pair<int, int>, int>> ranked;
    for (size_t i = 0; i < k; ++i) {
        if (g.degree(face[i]) > 4) continue;
        CycleContext probe = top;
        const long s = static_cast<long>((i + 1) % k);
        std::rotate(probe.cycle.begin(), probe.cycle.begin() + s, probe.cycle.end());
        std::rotate(probe.inner.begin(), probe.inner.begin() + s, probe.inner.end());
        ranked.push_back({{violates_ip5(probe) ? 1 : 0, face[i]}, static_cast<int>(i)});
    }
    std::sort(ranked.begin(), ranked.end());
    std::vector<int> out;
    for (const auto& r : ranked) out.push_back(r.second);
    return out;
}

LocalBook embed_biconnected(const EmbeddedGraph& g, EmbedStats& stats) {
    const FaceSet faces = trace_faces(g);
    const OuterFaceChoice choice = choose_outer_face(g, faces);
    std::vector<int> ids(faces.faces.size());
    for (size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<int>(i);
    std::stable_sort(ids.begin(), ids.end(),
                     [&](int a, int b) { return faces.faces[a].size() < faces.faces[b].size(); });
    std::vector<int> outer_faces{choice.face_id};
    for (int f : ids)
        if (f != choice.face_id && face_is_simple(faces.faces[f]) && face_is_chordless(g, faces.faces[f]))
            outer_faces.push_back(f);

    std::string last_error;
    int tried = 0;
    for (int f : outer_faces) {
        const auto& face = faces.faces[f];
        std::vector<int> vks = vk_candidates(g, face);
        if (vks.empty()) vks.push_back(-1);
        for (int vk : vks)
            for (int variant = 0; variant < 2; ++variant) {
                if (tried >= kMaxAttempts) break;
                ++tried;
                LevelOptions opt;
                opt.swap_block_rule = variant == 1;
                EmbedStats local;
                try {
                    LocalBook out = embed_biconnected_once(g, face, vk, opt, local);
                    local.attempts = tried;
                    stats.merge(local);
                    return out;
                } catch (const EmbedError& e) {
                    last_error = e.what();
                    ++stats.rejected_attempts;
                    stats.merge_checks(local);
                }
            }
    }
    throw EmbedError("all " + std::to_string(tried) + " layout attempts failed; last: " + last_error);
}

// Embeds one block; returns its order starting anywhere and its pages.
LocalBook embed_block(const EmbeddedGraph& g, const Block& block, EmbedStats& stats) {
    LocalBook out;
    if (block.edges.size() == 1) {
        out.order = {block.edges[0].u, block.edges[0].v};
        out.pages[block.edges[0]] = 1;
        return out;
    }
    Subgraph sub = induced_subgraph(g, block.vertices);
    const EmbeddedGraph& b = sub.graph;
    const auto& map = sub.local_to_global;
    bool cycle = true;
    for (int v = 0; v < b.n(); ++v)
        if (b.degree(v) != 2) cycle = false;
    LocalBook local;
    if (cycle) {
        int start = 0;
        for (int v = 1; v < b.n(); ++v)
            if (map[v] < map[start]) start = v;
        int a = b.rotation[start][0], c = b.rotation[start][1];
        int prev = start, cur = map[a] < map[c] ? a : c;
        local.order = {start};
        while (cur != start) {
            local.order.push_back(cur);
            int nx = b.rotation[cur][0] == prev ? b.rotation[cur][1] : b.rotation[cur][0];
            prev = cur;
            cur = nx;
        }
        for (size_t i = 0; i + 1 < local.order.size(); ++i) local.pages[make_edge(local.order[i], local.order[i + 1])] = 1;
        local.pages[make_edge(local.order.front(), local.order.back())] = 3;
    } else {
        local = embed_biconnected(b, stats);
    }
    for (int v : local.order) out.order.push_back(map[v]);
    for (const auto& [e, p] : local.pages) out.pages[make_edge(map[e.u], map[e.v])] = p;
    return out;
}

}  // namespace

EmbedResult embed_book_with_stats(const EmbeddedGraph& g) {
    validate(g);
    EmbedResult res;
    const int n = g.n();
    const auto comp = component_ids(g);
    const auto blocks = biconnected_components(g);
    std::vector<std::vector<int>> blocks_of(static_cast<size_t>(n));
    for (size_t i = 0; i < blocks.size(); ++i)
        if (!blocks[i].vertices.empty()) blocks_of[comp[blocks[i].vertices[0]]].push_back(static_cast<int>(i));

    std::vector<char> done(static_cast<size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
        const int c = comp[v];
        if (done[c]) continue;
        done[c] = 1;
        if (blocks_of[c].empty()) {
            res.book.order.push_back(v);
            continue;
        }
        // blocks_of[c] is in block-cut tree BFS order; parents precede children.
        Spine spine;
        spine.ensure(n - 1);
        bool first = true;
        for (int bi : blocks_of[c]) {
            const Block& blk = blocks[bi];
            LocalBook lb = embed_block(g, blk, res.stats);
            for (const auto& [e, p] : lb.pages) res.book.pages[e] = p;
            if (first) {
                for (int x : lb.order) spine.push_back(x);
                first = false;
                continue;
            }
            auto it = std::find(lb.order.begin(), lb.order.end(), blk.cut_vertex);
            if (it == lb.order.end()) throw EmbedError("block does not contain its cut vertex");
            std::rotate(lb.order.begin(), it, lb.order.end());
            int cur = blk.cut_vertex;
            for (size_t i = 1; i < lb.order.size(); ++i) {
                spine.insert_after(cur, lb.order[i]);
                cur = lb.order[i];
            }
        }
        for (int x : spine.to_vector()) res.book.order.push_back(x);
    }
    VerifierReport rep = check(g, res.book, 3);
    if (!rep.ok) {
        std::string msg = "embedding failed verification";
        if (!rep.violations.empty()) msg += ": " + rep.violations.front().describe();
        throw EmbedError(msg);
    }
    return res;
}

BookEmbedding embed_book(const EmbeddedGraph& g) { return embed_book_with_stats(g).book; }

}  // namespace pagebook
