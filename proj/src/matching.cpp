#include "gfactor/matching.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <stdexcept>

namespace gfactor {

MatchingGraph::MatchingGraph(int n, const std::vector<Edge>& edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("MatchingGraph: negative vertex count");
    std::map<std::pair<int, int>, size_t> seen;
    for (const Edge& e : edges) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw std::invalid_argument("MatchingGraph: endpoint out of range");
        if (e.u == e.v) throw std::invalid_argument("MatchingGraph: self-loops not allowed");
        if (e.w > (i64(1) << 50) || e.w < -(i64(1) << 50))
            throw std::invalid_argument("MatchingGraph: weight magnitude too large");
        auto key = std::minmax(e.u, e.v);
        auto it = seen.find(key);
        if (it == seen.end()) {
            seen.emplace(key, edges_.size());
            edges_.push_back({key.first, key.second, e.w});
        } else if (e.w > edges_[it->second].w) {
            edges_[it->second].w = e.w;
        }
    }
}

namespace {

/*
 * Primal-dual weighted blossom algorithm, structured after Joris van
 * Rantwijk's mwmatching (the implementation NetworkX adopted), run in
 * max-cardinality mode: the result is a maximum-cardinality matching of
 * maximum weight, which is exactly the max-weight perfect matching whenever
 * one exists.
 *
 * Conventions carried over from that layout:
 *  - edge k has directed "endpoints" 2k and 2k+1; endpoint[p] is the vertex
 *    at p, p^1 is the opposite end;
 *  - blossoms are numbered n..2n-1, vertices double as trivial blossoms;
 *  - label 1 = S (even), 2 = T (odd), bit 4 marks the path scan;
 *  - slack(k) = u[i] + u[j] - 2w(k): weights are doubled inside the slack so
 *    integer weights keep every dual integral (all labeled vertices share one
 *    dual parity class, making S-S slacks even before they are halved).
 */
class BlossomSolver {
  public:
    explicit BlossomSolver(const MatchingGraph& g)
        : nvertex(g.n()),
          nedge(int(g.edges().size())),
          edges(g.edges()),
          endpoint(size_t(2 * nedge)),
          neighbend(size_t(nvertex)),
          mate(size_t(nvertex), -1),
          label(size_t(2 * nvertex), 0),
          labelend(size_t(2 * nvertex), -1),
          inblossom(size_t(nvertex)),
          blossomparent(size_t(2 * nvertex), -1),
          blossomchilds(size_t(2 * nvertex)),
          blossombase(size_t(2 * nvertex), -1),
          blossomendps(size_t(2 * nvertex)),
          dualvar(size_t(2 * nvertex), 0),
          allowedge(size_t(nedge), false) {
        for (int k = 0; k < nedge; ++k) {
            endpoint[size_t(2 * k)] = edges[size_t(k)].u;
            endpoint[size_t(2 * k + 1)] = edges[size_t(k)].v;
            neighbend[size_t(edges[size_t(k)].u)].push_back(2 * k + 1);
            neighbend[size_t(edges[size_t(k)].v)].push_back(2 * k);
        }
        i64 maxweight = 0;
        for (const auto& e : edges) maxweight = std::max(maxweight, e.w);
        for (int v = 0; v < nvertex; ++v) {
            inblossom[size_t(v)] = v;
            blossombase[size_t(v)] = v;
            dualvar[size_t(v)] = maxweight;
        }
        for (int b = 2 * nvertex - 1; b >= nvertex; --b) unusedblossoms.push_back(b);
    }

    void run();
    bool verify_optimum() const;

    int nvertex, nedge;
    std::vector<MatchingGraph::Edge> edges;
    std::vector<int> endpoint;
    std::vector<std::vector<int>> neighbend;
    std::vector<int> mate;  // remote endpoint of the matched edge, or -1
    std::vector<int> label;
    std::vector<int> labelend;
    std::vector<int> inblossom;
    std::vector<int> blossomparent;
    std::vector<std::vector<int>> blossomchilds;
    std::vector<int> blossombase;
    std::vector<std::vector<int>> blossomendps;
    std::vector<int> unusedblossoms;
    std::vector<i64> dualvar;
    std::vector<char> allowedge;
    std::vector<int> queue;

  private:
    i64 slack(int k) const {
        const auto& e = edges[size_t(k)];
        return dualvar[size_t(e.u)] + dualvar[size_t(e.v)] - 2 * e.w;
    }

    void blossom_leaves(int b, std::vector<int>& out) const {
        if (b < nvertex) {
            out.push_back(b);
            return;
        }
        for (int c : blossomchilds[size_t(b)]) blossom_leaves(c, out);
    }

    static size_t wrap(int j, int len) { return size_t(((j % len) + len) % len); }

    static int index_of(const std::vector<int>& xs, int x) {
        for (size_t i = 0; i < xs.size(); ++i)
            if (xs[i] == x) return int(i);
        assert(false && "index_of: element not found");
        return -1;
    }

    void assign_label(int w, int t, int p) {
        int b = inblossom[size_t(w)];
        assert(label[size_t(w)] == 0 && label[size_t(b)] == 0);
        label[size_t(w)] = label[size_t(b)] = t;
        labelend[size_t(w)] = labelend[size_t(b)] = p;
        if (t == 1) {
            blossom_leaves(b, queue);  // S-blossom: scan all vertices
        } else {
            int base = blossombase[size_t(b)];
            assert(mate[size_t(base)] >= 0);
            assign_label(endpoint[size_t(mate[size_t(base)])], 1, mate[size_t(base)] ^ 1);
        }
    }

    /* Trace back from v and w; return the base of a common ancestor blossom,
       or -1 if v and w lie in different trees (an augmenting path). */
    int scan_blossom(int v, int w) {
        std::vector<int> path;
        int base = -1;
        while (v != -1 || w != -1) {
            int b = inblossom[size_t(v)];
            if (label[size_t(b)] & 4) {
                base = blossombase[size_t(b)];
                break;
            }
            assert(label[size_t(b)] == 1);
            path.push_back(b);
            label[size_t(b)] = 5;
            assert(labelend[size_t(b)] == mate[size_t(blossombase[size_t(b)])]);
            if (labelend[size_t(b)] == -1) {
                v = -1;  // reached a single (root) vertex
            } else {
                v = endpoint[size_t(labelend[size_t(b)])];
                b = inblossom[size_t(v)];
                assert(label[size_t(b)] == 2);
                assert(labelend[size_t(b)] >= 0);
                v = endpoint[size_t(labelend[size_t(b)])];
            }
            if (w != -1) std::swap(v, w);
        }
        for (int b : path) label[size_t(b)] = 1;
        return base;
    }

    /* Contract the cycle through tight edge k around the given base vertex. */
    void add_blossom(int base, int k) {
        int v = edges[size_t(k)].u;
        int w = edges[size_t(k)].v;
        int bb = inblossom[size_t(base)];
        int bv = inblossom[size_t(v)];
        int bw = inblossom[size_t(w)];
        assert(!unusedblossoms.empty());
        int b = unusedblossoms.back();
        unusedblossoms.pop_back();
        blossombase[size_t(b)] = base;
        blossomparent[size_t(b)] = -1;
        blossomparent[size_t(bb)] = b;
        auto& path = blossomchilds[size_t(b)];
        auto& endps = blossomendps[size_t(b)];
        path.clear();
        endps.clear();
        while (bv != bb) {
            blossomparent[size_t(bv)] = b;
            path.push_back(bv);
            endps.push_back(labelend[size_t(bv)]);
            assert(label[size_t(bv)] == 2 ||
                   (label[size_t(bv)] == 1 &&
                    labelend[size_t(bv)] == mate[size_t(blossombase[size_t(bv)])]));
            assert(labelend[size_t(bv)] >= 0);
            v = endpoint[size_t(labelend[size_t(bv)])];
            bv = inblossom[size_t(v)];
        }
        path.push_back(bb);
        std::reverse(path.begin(), path.end());
        std::reverse(endps.begin(), endps.end());
        endps.push_back(2 * k);
        while (bw != bb) {
            blossomparent[size_t(bw)] = b;
            path.push_back(bw);
            endps.push_back(labelend[size_t(bw)] ^ 1);
            assert(label[size_t(bw)] == 2 ||
                   (label[size_t(bw)] == 1 &&
                    labelend[size_t(bw)] == mate[size_t(blossombase[size_t(bw)])]));
            assert(labelend[size_t(bw)] >= 0);
            w = endpoint[size_t(labelend[size_t(bw)])];
            bw = inblossom[size_t(w)];
        }
        assert(label[size_t(bb)] == 1);
        label[size_t(b)] = 1;
        labelend[size_t(b)] = labelend[size_t(bb)];
        dualvar[size_t(b)] = 0;
        std::vector<int> leaves;
        blossom_leaves(b, leaves);
        for (int lv : leaves) {
            if (label[size_t(inblossom[size_t(lv)])] == 2) queue.push_back(lv);
            inblossom[size_t(lv)] = b;
        }
    }

    void expand_blossom(int b, bool endstage) {
        for (int s : blossomchilds[size_t(b)]) {
            blossomparent[size_t(s)] = -1;
            if (s < nvertex) {
                inblossom[size_t(s)] = s;
            } else if (endstage && dualvar[size_t(s)] == 0) {
                expand_blossom(s, endstage);
            } else {
                std::vector<int> lv;
                blossom_leaves(s, lv);
                for (int x : lv) inblossom[size_t(x)] = s;
            }
        }
        if (!endstage && label[size_t(b)] == 2) {
            // The expanding blossom sat on an alternating tree path: relabel
            // the sub-path from the entry child to the base, free the rest.
            int entrychild = inblossom[size_t(endpoint[size_t(labelend[size_t(b)] ^ 1)])];
            auto& childs = blossomchilds[size_t(b)];
            auto& endps = blossomendps[size_t(b)];
            int len = int(childs.size());
            int j = index_of(childs, entrychild);
            int jstep, endptrick;
            if (j & 1) {
                j -= len;  // odd index: walk forward (wraps)
                jstep = 1;
                endptrick = 0;
            } else {
                jstep = -1;  // even index: walk backward
                endptrick = 1;
            }
            int p = labelend[size_t(b)];
            while (j != 0) {
                label[size_t(endpoint[size_t(p ^ 1)])] = 0;
                label[size_t(endpoint[size_t(endps[wrap(j - endptrick, len)] ^ endptrick ^ 1)])] = 0;
                assign_label(endpoint[size_t(p ^ 1)], 2, p);
                allowedge[size_t(endps[wrap(j - endptrick, len)] / 2)] = true;
                j += jstep;
                p = endps[wrap(j - endptrick, len)] ^ endptrick;
                allowedge[size_t(p / 2)] = true;
                j += jstep;
            }
            // Relabel the base child T without stepping through to its mate.
            int bv = childs[wrap(j, len)];
            label[size_t(endpoint[size_t(p ^ 1)])] = 2;
            label[size_t(bv)] = 2;
            labelend[size_t(endpoint[size_t(p ^ 1)])] = p;
            labelend[size_t(bv)] = p;
            j += jstep;
            while (childs[wrap(j, len)] != entrychild) {
                int bvv = childs[wrap(j, len)];
                if (label[size_t(bvv)] == 1) {
                    j += jstep;
                    continue;
                }
                std::vector<int> lv;
                blossom_leaves(bvv, lv);
                int vfound = -1;
                for (int x : lv)
                    if (label[size_t(x)] != 0) {
                        vfound = x;
                        break;
                    }
                if (vfound != -1) {
                    // The child was reached from outside while contracted;
                    // re-grow it as a T-blossom in its own right.
                    assert(label[size_t(vfound)] == 2);
                    assert(inblossom[size_t(vfound)] == bvv);
                    label[size_t(vfound)] = 0;
                    label[size_t(endpoint[size_t(mate[size_t(blossombase[size_t(bvv)])])])] = 0;
                    assign_label(vfound, 2, labelend[size_t(vfound)]);
                }
                j += jstep;
            }
        }
        label[size_t(b)] = 0;
        labelend[size_t(b)] = -1;
        blossomchilds[size_t(b)].clear();
        blossomendps[size_t(b)].clear();
        blossombase[size_t(b)] = -1;
        unusedblossoms.push_back(b);
    }

    /* Re-root blossom b so vertex v becomes its base (matching inside the
       blossom is flipped along the way). */
    void augment_blossom(int b, int v) {
        int t = v;
        while (blossomparent[size_t(t)] != b) t = blossomparent[size_t(t)];
        if (t >= nvertex) augment_blossom(t, v);
        auto& childs = blossomchilds[size_t(b)];
        auto& endps = blossomendps[size_t(b)];
        int len = int(childs.size());
        int i = index_of(childs, t);
        int j = i, jstep, endptrick;
        if (i & 1) {
            j -= len;
            jstep = 1;
            endptrick = 0;
        } else {
            jstep = -1;
            endptrick = 1;
        }
        while (j != 0) {
            j += jstep;
            int tt = childs[wrap(j, len)];
            int p = endps[wrap(j - endptrick, len)] ^ endptrick;
            if (tt >= nvertex) augment_blossom(tt, endpoint[size_t(p)]);
            j += jstep;
            tt = childs[wrap(j, len)];
            if (tt >= nvertex) augment_blossom(tt, endpoint[size_t(p ^ 1)]);
            mate[size_t(endpoint[size_t(p)])] = p ^ 1;
            mate[size_t(endpoint[size_t(p ^ 1)])] = p;
        }
        std::rotate(childs.begin(), childs.begin() + i, childs.end());
        std::rotate(endps.begin(), endps.begin() + i, endps.end());
        blossombase[size_t(b)] = blossombase[size_t(childs[0])];
        assert(blossombase[size_t(b)] == v);
    }

    /* Swap matched/unmatched along the augmenting path through tight edge k. */
    void augment_matching(int k) {
        int v = edges[size_t(k)].u;
        int w = edges[size_t(k)].v;
        const std::pair<int, int> sides[2] = {{v, 2 * k + 1}, {w, 2 * k}};
        for (auto [s, p] : sides) {
            while (true) {
                int bs = inblossom[size_t(s)];
                assert(label[size_t(bs)] == 1);
                assert(labelend[size_t(bs)] == mate[size_t(blossombase[size_t(bs)])]);
                if (bs >= nvertex) augment_blossom(bs, s);
                mate[size_t(s)] = p;
                if (labelend[size_t(bs)] == -1) break;  // reached the tree root
                int t = endpoint[size_t(labelend[size_t(bs)])];
                int bt = inblossom[size_t(t)];
                assert(label[size_t(bt)] == 2);
                assert(labelend[size_t(bt)] >= 0);
                s = endpoint[size_t(labelend[size_t(bt)])];
                int jj = endpoint[size_t(labelend[size_t(bt)] ^ 1)];
                assert(blossombase[size_t(bt)] == t);
                if (bt >= nvertex) augment_blossom(bt, jj);
                mate[size_t(jj)] = labelend[size_t(bt)];
                p = labelend[size_t(bt)] ^ 1;
            }
        }
    }
};

void BlossomSolver::run() {
    for (int stage = 0; stage < nvertex; ++stage) {
        std::fill(label.begin(), label.end(), 0);
        std::fill(labelend.begin(), labelend.end(), -1);
        std::fill(allowedge.begin(), allowedge.end(), char(false));
        queue.clear();
        for (int v = 0; v < nvertex; ++v)
            if (mate[size_t(v)] == -1 && label[size_t(inblossom[size_t(v)])] == 0)
                assign_label(v, 1, -1);

        bool augmented = false;
        while (true) {
            while (!queue.empty() && !augmented) {
                int v = queue.back();
                queue.pop_back();
                assert(label[size_t(inblossom[size_t(v)])] == 1);
                for (int p : neighbend[size_t(v)]) {
                    int k = p / 2;
                    int w = endpoint[size_t(p)];
                    if (inblossom[size_t(v)] == inblossom[size_t(w)]) continue;
                    if (!allowedge[size_t(k)] && slack(k) <= 0) allowedge[size_t(k)] = true;
                    if (!allowedge[size_t(k)]) continue;
                    int bw = inblossom[size_t(w)];
                    if (label[size_t(bw)] == 0) {
                        assign_label(w, 2, p ^ 1);
                    } else if (label[size_t(bw)] == 1) {
                        int base = scan_blossom(v, w);
                        if (base >= 0) {
                            add_blossom(base, k);
                        } else {
                            augment_matching(k);
                            augmented = true;
                            break;
                        }
                    } else if (label[size_t(w)] == 0) {
                        assert(label[size_t(bw)] == 2);
                        label[size_t(w)] = 2;
                        labelend[size_t(w)] = p ^ 1;
                    }
                }
            }
            if (augmented) break;

            // Dual adjustment.  Candidates are scanned fresh each round
            // rather than cached per blossom; at these sizes the O(m) sweep
            // is cheaper than it is subtle.
            int deltatype = -1, deltaedge = -1, deltablossom = -1;
            i64 delta = 0;
            for (int k = 0; k < nedge; ++k) {  // S to free vertex
                int li = label[size_t(inblossom[size_t(edges[size_t(k)].u)])];
                int lj = label[size_t(inblossom[size_t(edges[size_t(k)].v)])];
                if (inblossom[size_t(edges[size_t(k)].u)] == inblossom[size_t(edges[size_t(k)].v)])
                    continue;
                if ((li == 1 && lj == 0) || (li == 0 && lj == 1)) {
                    i64 d = slack(k);
                    if (deltatype == -1 || d < delta) {
                        deltatype = 2;
                        delta = d;
                        deltaedge = k;
                    }
                }
            }
            for (int k = 0; k < nedge; ++k) {  // S to S across trees
                int bi = inblossom[size_t(edges[size_t(k)].u)];
                int bj = inblossom[size_t(edges[size_t(k)].v)];
                if (bi == bj) continue;
                if (label[size_t(bi)] == 1 && label[size_t(bj)] == 1) {
                    i64 d = slack(k);
                    assert((d & 1) == 0);  // labeled duals share a parity class
                    d /= 2;
                    if (deltatype == -1 || d < delta) {
                        deltatype = 3;
                        delta = d;
                        deltaedge = k;
                    }
                }
            }
            for (int b = nvertex; b < 2 * nvertex; ++b) {  // T-blossom expansion
                if (blossombase[size_t(b)] >= 0 && blossomparent[size_t(b)] == -1 &&
                    label[size_t(b)] == 2) {
                    i64 d = dualvar[size_t(b)];
                    if (deltatype == -1 || d < delta) {
                        deltatype = 4;
                        delta = d;
                        deltablossom = b;
                    }
                }
            }
            if (deltatype == -1) {
                // No way to enlarge the forest: max-cardinality optimum.
                deltatype = 1;
                delta = dualvar[0];
                for (int v = 1; v < nvertex; ++v) delta = std::min(delta, dualvar[size_t(v)]);
                delta = std::max<i64>(0, delta);
            }

            for (int v = 0; v < nvertex; ++v) {
                int lb = label[size_t(inblossom[size_t(v)])];
                if (lb == 1)
                    dualvar[size_t(v)] -= delta;
                else if (lb == 2)
                    dualvar[size_t(v)] += delta;
            }
            for (int b = nvertex; b < 2 * nvertex; ++b) {
                if (blossombase[size_t(b)] >= 0 && blossomparent[size_t(b)] == -1) {
                    if (label[size_t(b)] == 1)
                        dualvar[size_t(b)] += delta;
                    else if (label[size_t(b)] == 2)
                        dualvar[size_t(b)] -= delta;
                }
            }

            if (deltatype == 1) break;  // optimum reached
            if (deltatype == 2) {
                allowedge[size_t(deltaedge)] = true;
                int i = edges[size_t(deltaedge)].u;
                if (label[size_t(inblossom[size_t(i)])] == 0) i = edges[size_t(deltaedge)].v;
                assert(label[size_t(inblossom[size_t(i)])] == 1);
                queue.push_back(i);
            } else if (deltatype == 3) {
                allowedge[size_t(deltaedge)] = true;
                assert(label[size_t(inblossom[size_t(edges[size_t(deltaedge)].u)])] == 1);
                queue.push_back(edges[size_t(deltaedge)].u);
            } else if (deltatype == 4) {
                expand_blossom(deltablossom, false);
            }
        }
        if (!augmented) break;

        // End of a successful stage: expand S-blossoms whose dual hit zero.
        for (int b = nvertex; b < 2 * nvertex; ++b)
            if (blossomparent[size_t(b)] == -1 && blossombase[size_t(b)] >= 0 &&
                label[size_t(b)] == 1 && dualvar[size_t(b)] == 0)
                expand_blossom(b, true);
    }

    for (int v = 0; v < nvertex; ++v)
        if (mate[size_t(v)] >= 0)
            assert(mate[size_t(endpoint[size_t(mate[size_t(v)])])] == (mate[size_t(v)] ^ 1));
}

bool BlossomSolver::verify_optimum() const {
    i64 minu = 0;
    for (int v = 0; v < nvertex; ++v) minu = std::min(minu, dualvar[size_t(v)]);
    i64 offset = std::max<i64>(0, -minu);  // max-cardinality mode shifts duals
    for (int v = 0; v < nvertex; ++v)
        if (dualvar[size_t(v)] + offset < 0) return false;
    for (int b = nvertex; b < 2 * nvertex; ++b)
        if (blossombase[size_t(b)] >= 0 && dualvar[size_t(b)] < 0) return false;

    for (int k = 0; k < nedge; ++k) {
        const auto& e = edges[size_t(k)];
        i64 s = dualvar[size_t(e.u)] + dualvar[size_t(e.v)] - 2 * e.w;
        std::vector<int> ci{e.u}, cj{e.v};
        while (blossomparent[size_t(ci.back())] != -1) ci.push_back(blossomparent[size_t(ci.back())]);
        while (blossomparent[size_t(cj.back())] != -1) cj.push_back(blossomparent[size_t(cj.back())]);
        std::reverse(ci.begin(), ci.end());
        std::reverse(cj.begin(), cj.end());
        for (size_t t = 0; t < std::min(ci.size(), cj.size()); ++t) {
            if (ci[t] != cj[t]) break;
            s += 2 * dualvar[size_t(ci[t])];
        }
        if (s < 0) return false;
        bool mi = mate[size_t(e.u)] >= 0 && mate[size_t(e.u)] / 2 == k;
        bool mj = mate[size_t(e.v)] >= 0 && mate[size_t(e.v)] / 2 == k;
        if (mi != mj) return false;
        if (mi && s != 0) return false;
    }
    for (int v = 0; v < nvertex; ++v)
        if (mate[size_t(v)] == -1 && dualvar[size_t(v)] + offset != 0) return false;
    for (int b = nvertex; b < 2 * nvertex; ++b) {
        if (blossombase[size_t(b)] < 0 || dualvar[size_t(b)] <= 0) continue;
        const auto& endps = blossomendps[size_t(b)];
        if (endps.size() % 2 != 1) return false;
        for (size_t t = 1; t < endps.size(); t += 2) {
            int p = endps[t];
            if (mate[size_t(endpoint[size_t(p)])] != (p ^ 1)) return false;
            if (mate[size_t(endpoint[size_t(p ^ 1)])] != p) return false;
        }
    }
    return true;
}

MatchingResult finalize(const MatchingGraph& g, const std::vector<int>& matevtx, bool certified) {
    MatchingResult r;
    r.mate = matevtx;
    r.certified = certified;
    r.feasible = true;
    for (int v = 0; v < g.n(); ++v) {
        if (matevtx[size_t(v)] == -1)
            r.feasible = false;
        else if (v < matevtx[size_t(v)])
            r.pairs.emplace_back(v, matevtx[size_t(v)]);
    }
    i64 w = 0;
    for (const auto& e : g.edges())
        if (matevtx[size_t(e.u)] == e.v) w += e.w;
    r.weight = w;
    return r;
}

}  // namespace

MatchingResult max_weight_perfect_matching(const MatchingGraph& g) {
    BlossomSolver solver(g);
    solver.run();
    bool certified = solver.verify_optimum();
    if (!certified) throw std::logic_error("max_weight_perfect_matching: dual certificate failed");
    std::vector<int> matevtx(size_t(g.n()), -1);
    for (int v = 0; v < g.n(); ++v)
        if (solver.mate[size_t(v)] >= 0) matevtx[size_t(v)] = solver.endpoint[size_t(solver.mate[size_t(v)])];
    return finalize(g, matevtx, certified);
}

MatchingResult brute_force_perfect_matching(const MatchingGraph& g) {
    int n = g.n();
    if (n > 12) throw std::invalid_argument("brute_force_perfect_matching: more than 12 nodes");
    // adjacency with collapsed weights; -1 in "present" marks absence
    std::vector<std::vector<char>> present(size_t(n), std::vector<char>(size_t(n), 0));
    std::vector<std::vector<i64>> wt(size_t(n), std::vector<i64>(size_t(n), 0));
    for (const auto& e : g.edges()) {
        present[size_t(e.u)][size_t(e.v)] = present[size_t(e.v)][size_t(e.u)] = 1;
        wt[size_t(e.u)][size_t(e.v)] = wt[size_t(e.v)][size_t(e.u)] = e.w;
    }
    std::vector<int> cur(size_t(n), -1), best;
    bool found = false;
    i64 bestw = 0;
    std::function<void(int, i64)> rec = [&](int v, i64 acc) {
        while (v < n && cur[size_t(v)] != -1) ++v;
        if (v == n) {
            if (!found || acc > bestw) {
                found = true;
                bestw = acc;
                best = cur;
            }
            return;
        }
        for (int u = v + 1; u < n; ++u) {
            if (cur[size_t(u)] != -1 || !present[size_t(v)][size_t(u)]) continue;
            cur[size_t(v)] = u;
            cur[size_t(u)] = v;
            rec(v + 1, acc + wt[size_t(v)][size_t(u)]);
            cur[size_t(v)] = -1;
            cur[size_t(u)] = -1;
        }
    };
    rec(0, 0);
    if (!found) {
        MatchingResult r;
        r.feasible = false;
        r.mate.assign(size_t(n), -1);
        return r;
    }
    return finalize(g, best, false);
}

}  // namespace gfactor
