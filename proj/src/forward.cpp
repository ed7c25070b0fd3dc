#include "ambc/forward.hpp"

namespace ambc {

ForwardStep forward_step(const Window& w, const Numbering& d) {
    AffineStepResult step = affine_forward_step(w, d);
    return ForwardStep{step.next, defining_data(w.n(), step.back_posts), std::move(step.levels)};
}

namespace {

OmegaTriple run_phi(const Window& w, NumberingPolicy policy) {
    OmegaTriple out;
    out.n = w.n();
    Window cur = w;
    i64 steps = 0;
    while (!cur.is_empty()) {
        if (++steps > w.n()) throw std::logic_error("forward map exceeded n steps");
        i64 before = cur.defined_count();
        Numbering d = policy == NumberingPolicy::SW ? sw_numbering(cur) : ne_numbering(cur);
        ForwardStep step = forward_step(cur, d);
        out.Q.rows.push_back(step.stream.A);
        out.P.rows.push_back(step.stream.B);
        out.rho.push_back(step.stream.r);
        cur = step.next;
        if (cur.defined_count() >= before) throw std::logic_error("forward step did not shrink the ball set");
    }
    return out;
}

}  // namespace

OmegaTriple phi(const Window& w) { return run_phi(w, NumberingPolicy::SW); }

OmegaTriple phi_with_numbering_policy(const Window& w, NumberingPolicy policy) {
    return run_phi(w, policy);
}

}  // namespace ambc
