#include <cmath>

#include "ioncav/experiments.hpp"

namespace ioncav {

std::string to_string(ModelKind m)
{
    switch (m) {
    case ModelKind::DickeIdeal: return "dicke_ideal";
    case ModelKind::DickeLossy: return "dicke_lossy";
    case ModelKind::EffectiveTwoLevel: return "effective";
    case ModelKind::FullThreeLevel: return "full";
    }
    return "?";
}

std::string to_string(EngineKind e)
{
    switch (e) {
    case EngineKind::ClosedForm: return "closed_form";
    case EngineKind::Lindblad: return "lindblad";
    case EngineKind::MCWF: return "mcwf";
    }
    return "?";
}

ModelKind parse_model_kind(const std::string& s)
{
    for (ModelKind m : {ModelKind::DickeIdeal, ModelKind::DickeLossy, ModelKind::EffectiveTwoLevel,
                        ModelKind::FullThreeLevel}) {
        if (to_string(m) == s) return m;
    }
    throw ValidationError("unknown model '" + s + "' (dicke_ideal, dicke_lossy, effective, full)");
}

EngineKind parse_engine_kind(const std::string& s)
{
    for (EngineKind e : {EngineKind::ClosedForm, EngineKind::Lindblad, EngineKind::MCWF}) {
        if (to_string(e) == s) return e;
    }
    throw ValidationError("unknown engine '" + s + "' (closed_form, lindblad, mcwf)");
}

void Scenario::validate() const
{
    params.validate();
    if (!(t_max > 0) || !std::isfinite(t_max)) throw ValidationError("t_max must be positive");
    if (n_points < 2) throw ValidationError("n_points must be at least 2");
    if (initial_state != "10" && initial_state != "01" && initial_state != "sub" && initial_state != "super") {
        throw ValidationError("initial_state must be one of 10, 01, sub, super");
    }
    const bool dicke_model = model == ModelKind::DickeIdeal || model == ModelKind::DickeLossy;
    if (engine == EngineKind::ClosedForm && !dicke_model) {
        throw ValidationError("the closed_form engine only solves the Dicke models");
    }
    if (engine == EngineKind::MCWF) {
        if (model == ModelKind::DickeIdeal) throw ValidationError("mcwf needs jump channels; dicke_ideal has none");
        if (model == ModelKind::FullThreeLevel) throw ValidationError("mcwf runs on the restricted models only");
        if (n_traj == 0) throw ValidationError("n_traj must be positive");
    }
    if (params.n_ions() != 2) throw ValidationError("scenarios describe two ions");
    if (dicke_model && !resolved_params().single_laser()) {
        throw ValidationError("the Dicke models need one laser shared by both ions");
    }
    if (model == ModelKind::FullThreeLevel && n_max < 1) throw ValidationError("n_max must be at least 1");
}

ModelParams Scenario::resolved_params() const
{
    ModelParams p = params;
    if (resonant) p.set_shared_laser_detuning(resonant_laser_detuning(p));
    return p;
}

dicke::AmplitudePair initial_amplitudes(const Scenario& s)
{
    if (s.initial_state == "10") return {1.0, 0.0};
    if (s.initial_state == "01") return {0.0, 1.0};
    const dicke::DickeParams d = reduce(s.resolved_params()).dicke();
    if (s.initial_state == "sub") return dicke::reconstruct(0.0, 1.0, d.r1, d.r2);
    if (s.initial_state == "super") return dicke::reconstruct(1.0, 0.0, d.r1, d.r2);
    throw ValidationError("unknown initial state '" + s.initial_state + "'");
}

namespace {

TimeSeriesTable atomic_table(const std::vector<double>& t, const std::vector<Matrix>& atoms,
                             const std::vector<double>& trace)
{
    const auto& names = AtomicObservables::column_names();
    std::vector<std::vector<double>> cols(names.size());
    for (const Matrix& m : atoms) {
        const std::vector<double> v = AtomicObservables::from_matrix(m).values();
        for (std::size_t c = 0; c < names.size(); ++c) cols[c].push_back(v[c]);
    }
    TimeSeriesTable tab(t);
    for (std::size_t c = 0; c < names.size(); ++c) tab.add_column(names[c], std::move(cols[c]));
    tab.add_column("trace", trace);
    return tab;
}

LindbladSystem restricted_system(const Scenario& s, const ModelParams& p)
{
    const LinearOp h = build_effective_hamiltonian(p);
    std::vector<JumpChannel> channels = build_jump_channels(p);
    if (s.model != ModelKind::EffectiveTwoLevel || !s.emission) {
        channels.erase(channels.begin(), channels.end() - 1);
    }
    if (s.model == ModelKind::DickeIdeal) channels.back().rate = 0.0;
    return {h, std::move(channels)};
}

}  // namespace

ScenarioResult run_scenario(const Scenario& s)
{
    s.validate();
    const ModelParams p = s.resolved_params();
    ScenarioResult res{TimeSeriesTable({}), std::nullopt, reduce(p), 0.0, {}};
    if (res.effective.validity_warning()) {
        res.warnings.push_back("elimination validity ratio " + format_number(res.effective.validity_ratio) +
                               " exceeds 0.1");
    }
    dicke::DickeParams dk;
    bool have_dicke = false;
    if (p.single_laser()) {
        dk = res.effective.dicke();
        if (s.model == ModelKind::DickeIdeal) dk.kappa = 0.0;
        have_dicke = true;
        const double w = std::abs(dicke::generalized_rabi(dk.alpha_total, dk.delta, dk.kappa));
        res.t_rabi = w > 0 ? 1.0 / w : 0.0;
    }
    const dicke::AmplitudePair c0 = initial_amplitudes(s);
    const std::vector<double> t = linear_grid(0.0, s.t_max, s.n_points);

    if (s.engine == EngineKind::ClosedForm) {
        if (!have_dicke) throw ValidationError("closed form needs a shared laser");
        std::vector<Matrix> atoms;
        for (double tk : t) {
            const dicke::AmplitudePair c = dicke::evolve_amplitudes(tk, c0, dk);
            Matrix m = Matrix::Zero(4, 4);
            m(0, 0) = 1.0 - c.norm2();
            m(1, 1) = std::norm(c.c01);
            m(2, 2) = std::norm(c.c10);
            m(1, 2) = c.c01 * std::conj(c.c10);
            m(2, 1) = std::conj(m(1, 2));
            atoms.push_back(m);
        }
        res.table = atomic_table(t, atoms, std::vector<double>(t.size(), 1.0));
        return res;
    }

    if (s.model == ModelKind::FullThreeLevel) {
        const FullLambdaModel full = build_full_lambda(p, s.n_max);
        const HilbertSpace& sp = full.hamiltonian.space;
        Vector psi = Vector::Zero(sp.dim());
        psi(sp.index_of("SD0")) = c0.c10;
        psi(sp.index_of("DS0")) = c0.c01;
        const LindbladResult lr = integrate_lindblad(LindbladSystem{full.hamiltonian, full.channels},
                                                     DensityMatrix::pure(sp, psi), t);
        std::vector<Matrix> atoms;
        for (const DensityMatrix& rho : lr.snapshots) atoms.push_back(qubit_block(partial_trace_cavity(rho)));
        res.table = atomic_table(t, atoms, lr.table.column("trace"));
        return res;
    }

    const LindbladSystem sys = restricted_system(s, p);
    const HilbertSpace& sp = sys.space();
    Vector psi = Vector::Zero(sp.dim());
    psi(single_excitation_index(sp, 1)) = c0.c10;
    psi(single_excitation_index(sp, 2)) = c0.c01;
    psi /= psi.norm();

    if (s.engine == EngineKind::MCWF) {
        const TrajectoryEnsemble ens = run_mcwf(sys, psi, t, s.n_traj, s.seed);
        res.table = ensemble_reduce(ens);
        res.jumps = jump_statistics(ens);
        return res;
    }
    const LindbladResult lr = integrate_lindblad(sys, DensityMatrix::pure(sp, psi), t);
    std::vector<Matrix> atoms;
    for (const DensityMatrix& rho : lr.snapshots) {
        const DensityMatrix a = partial_trace_cavity(rho);
        concurrence_x_form(a);
        atoms.push_back(a.matrix());
    }
    res.table = atomic_table(t, atoms, lr.table.column("trace"));
    return res;
}

}  // namespace ioncav
