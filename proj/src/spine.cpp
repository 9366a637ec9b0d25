#include "pagebook/embedder_ops.hpp"

namespace pagebook {

int Spine::add_node() {
    int id = static_cast<int>(prev_.size());
    ensure(id);
    return id;
}

void Spine::ensure(int id) {
    if (id < static_cast<int>(prev_.size())) return;
    prev_.resize(static_cast<size_t>(id) + 1, -1);
    next_.resize(static_cast<size_t>(id) + 1, -1);
    linked_.resize(static_cast<size_t>(id) + 1, 0);
}

void Spine::push_back(int x) {
    ensure(x);
    if (linked_[x]) throw EmbedError("spine: node " + std::to_string(x) + " placed twice");
    prev_[x] = tail_;
    next_[x] = -1;
    if (tail_ >= 0) next_[tail_] = x;
    else head_ = x;
    tail_ = x;
    linked_[x] = 1;
}

void Spine::insert_after(int at, int x) {
    ensure(x);
    if (!linked(at)) throw EmbedError("spine: anchor node " + std::to_string(at) + " not on spine");
    if (linked_[x]) throw EmbedError("spine: node " + std::to_string(x) + " placed twice");
    int nx = next_[at];
    prev_[x] = at;
    next_[x] = nx;
    next_[at] = x;
    if (nx >= 0) prev_[nx] = x;
    else tail_ = x;
    linked_[x] = 1;
}

void Spine::insert_before(int at, int x) {
    ensure(x);
    if (!linked(at)) throw EmbedError("spine: anchor node " + std::to_string(at) + " not on spine");
    if (linked_[x]) throw EmbedError("spine: node " + std::to_string(x) + " placed twice");
    int pv = prev_[at];
    next_[x] = at;
    prev_[x] = pv;
    prev_[at] = x;
    if (pv >= 0) next_[pv] = x;
    else head_ = x;
    linked_[x] = 1;
}

void Spine::remove(int x) {
    if (!linked(x)) throw EmbedError("spine: removing node " + std::to_string(x) + " not on spine");
    int pv = prev_[x], nx = next_[x];
    if (pv >= 0) next_[pv] = nx;
    else head_ = nx;
    if (nx >= 0) prev_[nx] = pv;
    else tail_ = pv;
    prev_[x] = next_[x] = -1;
    linked_[x] = 0;
}

std::vector<int> Spine::to_vector() const {
    std::vector<int> out;
    for (int x = head_; x >= 0; x = next_[x]) out.push_back(x);
    return out;
}

}  // namespace pagebook
