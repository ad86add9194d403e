// Serial reference for the sweep driver.

#include "ostrowski/sweep.hpp"

namespace ostrowski::reference {

SweepReport run_sweep_serial(const SweepConfig& cfg, const CorpusRegistry& registry) {
    const detail::SweepPlan plan = detail::plan_sweep(cfg, registry);
    std::vector<double> lhs;
    lhs.reserve(plan.lhs_keys.size());
    for (const detail::LhsKey& key : plan.lhs_keys) {
        lhs.push_back(detail::compute_lhs(plan, key, cfg.quad));
    }
    std::vector<Verdict> verdicts;
    verdicts.reserve(plan.tasks.size());
    for (const detail::SweepTask& task : plan.tasks) {
        verdicts.push_back(make_verdict(task.theorem, *plan.functions[task.function_index],
                                        task.params, lhs[task.lhs_key], cfg.quad));
    }
    return detail::assemble_report(cfg, plan, std::move(verdicts));
}

}  // namespace ostrowski::reference
