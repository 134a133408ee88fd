// Command-line front door: JSON in, JSON out. All mathematical results
// go to stdout; diagnostics go to stderr. Exit code 0 means "computed"
// (including mathematical "no"); 2 usage error, 3 bad input, 4
// resource cap exceeded.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "omega/io.hpp"
#include "omega/omega.hpp"

namespace {

using omega::Json;

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw omega::schema_error("cannot open file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw omega::schema_error("invalid JSON in " + path + ": " + e.what());
  }
  return j;
}

omega::SymplecticForm load_form(const std::string& path) {
  return omega::form_from_json(read_json_file(path));
}

void emit(const Json& j) { std::cout << j.dump() << "\n"; }

std::vector<double> parse_x0(const std::string& text) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      v.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw omega::schema_error("bad --x0 component: " + item);
    }
  }
  return v;
}

const char* kind_name(omega::GroupKind k) {
  switch (k) {
    case omega::GroupKind::Symplectic: return "symplectic";
    case omega::GroupKind::Antisymplectic: return "antisymplectic";
    case omega::GroupKind::LambdaSymplectic: return "lambda-symplectic";
    default: return "outside";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"omega-symplectic linear algebra toolkit"};
  app.require_subcommand(1);

  std::string form_path, matrix_path, field_path, ham_path, remainder_path;
  std::string lambda_text = "1", x0_text = "1,0", csv_path;
  std::uint64_t seed = 0;
  double dt = 1e-3, t_end = 10.0, tol_energy = 1e-8, tol_form = 1e-6;
  bool allow_constant = false;

  auto* validate = app.add_subcommand("validate-form", "validate a form matrix");
  validate->add_option("--form", form_path)->required();

  auto* darboux = app.add_subcommand("darboux", "compute a symplectic basis");
  darboux->add_option("--form", form_path)->required();

  auto* classify = app.add_subcommand("classify", "classify a matrix");
  classify->add_option("--form", form_path)->required();
  classify->add_option("--matrix", matrix_path)->required();

  auto* checkmat = app.add_subcommand("check-matrix", "Lie algebra membership");
  checkmat->add_option("--form", form_path)->required();
  checkmat->add_option("--matrix", matrix_path)->required();

  auto* checkfield = app.add_subcommand("check-field", "field recognition");
  checkfield->add_option("--form", form_path)->required();
  checkfield->add_option("--field", field_path)->required();
  checkfield->add_flag("--allow-constant", allow_constant);

  auto* recover = app.add_subcommand("recover", "recover the Hamiltonian");
  recover->add_option("--form", form_path)->required();
  recover->add_option("--field", field_path)->required();
  recover->add_flag("--allow-constant", allow_constant);

  auto* construct = app.add_subcommand("construct", "family construction");
  construct->add_option("--form", form_path)->required();
  construct->add_option("--matrix", matrix_path)->required();
  construct->add_option("--remainder", remainder_path)->required();

  auto* adapted = app.add_subcommand("adapted-form", "form adapted to skew L");
  adapted->add_option("--matrix", matrix_path)->required();

  auto* member = app.add_subcommand("random-member", "seeded group member");
  member->add_option("--form", form_path)->required();
  member->add_option("--lambda", lambda_text);
  member->add_option("--seed", seed);

  auto* simulate = app.add_subcommand("simulate", "flow diagnostics");
  simulate->add_option("--form", form_path)->required();
  simulate->add_option("--hamiltonian", ham_path)->required();
  simulate->add_option("--x0", x0_text);
  simulate->add_option("--dt", dt);
  simulate->add_option("--t", t_end);
  simulate->add_option("--tol-energy", tol_energy);
  simulate->add_option("--tol-form", tol_form);
  simulate->add_option("--csv", csv_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (*validate) {
      Json out;
      try {
        auto f = load_form(form_path);
        out["valid"] = true;
        out["dim"] = f.dim();
        out["minus_identity_square"] = f.is_minus_identity_square();
      } catch (const omega::odd_dimension_error& e) {
        out = Json{{"valid", false}, {"error", "OddDimension"}};
      } catch (const omega::not_skew_error& e) {
        out = Json{{"valid", false}, {"error", "NotSkewSymmetric"}};
      } catch (const omega::degenerate_error& e) {
        out = Json{{"valid", false}, {"error", "Degenerate"}};
      }
      emit(out);
    } else if (*darboux) {
      auto f = load_form(form_path);
      auto d = omega::darboux_basis(f);
      omega::Mat residual = d.p.transpose() * f.matrix() * d.p -
                            omega::standard_j(f.half_dim());
      emit(Json{{"p", omega::matrix_to_json(d.p)},
                {"residual", omega::matrix_to_json(residual)}});
    } else if (*classify) {
      auto f = load_form(form_path);
      auto b = omega::matrix_from_json(read_json_file(matrix_path));
      auto c = omega::classify(f, b);
      Json out;
      out["kind"] = kind_name(c.kind);
      out["lambda"] = c.lambda ? Json(omega::to_string(*c.lambda)) : Json();
      out["sigma"] = c.in_omega_n()
                         ? Json(c.kind == omega::GroupKind::Symplectic ? 1 : -1)
                         : Json();
      out["det"] = omega::to_string(b.det());
      emit(out);
    } else if (*checkmat) {
      auto f = load_form(form_path);
      auto l = omega::matrix_from_json(read_json_file(matrix_path));
      emit(Json{{"hamiltonian", omega::is_hamiltonian_matrix(f, l)},
                {"trace", omega::to_string(l.trace())}});
    } else if (*checkfield) {
      auto f = load_form(form_path);
      auto x = omega::field_from_json(read_json_file(field_path));
      omega::RecognitionResult r;
      try {
        r = omega::is_hamiltonian_field(f, x, allow_constant);
      } catch (const omega::constant_part_error& e) {
        std::cerr << e.what() << "\n";
        return 3;
      }
      Json out;
      out["hamiltonian"] = r.hamiltonian;
      if (!r.hamiltonian) {
        Json witness;
        witness["entry"] =
            Json::array({r.witness_entry->first, r.witness_entry->second});
        witness["residual"] = omega::poly_to_json(*r.witness_residual);
        witness["trace_at_zero"] = omega::to_string(r.trace_at_zero);
        out["witness"] = std::move(witness);
      }
      emit(out);
    } else if (*recover) {
      auto f = load_form(form_path);
      auto x = omega::field_from_json(read_json_file(field_path));
      auto hf = omega::recover_hamiltonian(f, x, allow_constant);
      emit(omega::poly_to_json(hf.hamiltonian));
    } else if (*construct) {
      auto f = load_form(form_path);
      auto l = omega::matrix_from_json(read_json_file(matrix_path));
      auto fpoly = omega::poly_from_json(read_json_file(remainder_path));
      omega::HamiltonianMatrix hm(f, l);
      auto hf = omega::construct_family(hm, fpoly);
      emit(omega::field_to_json(hf.field));
    } else if (*adapted) {
      auto l = omega::matrix_from_json(read_json_file(matrix_path));
      auto f = omega::adapted_form_for_skew(l);
      emit(omega::matrix_to_json(f.matrix()));
    } else if (*member) {
      auto f = load_form(form_path);
      auto b = omega::random_member(f, omega::parse_rational(lambda_text), seed);
      emit(omega::matrix_to_json(b));
    } else if (*simulate) {
      auto f = load_form(form_path);
      auto h = omega::poly_from_json(read_json_file(ham_path));
      auto hf = omega::field_from_hamiltonian(f, h);
      auto x0 = parse_x0(x0_text);
      omega::FlowOptions opt;
      opt.dt = dt;
      opt.t_end = t_end;
      opt.record_states = !csv_path.empty();
      auto trace = omega::integrate(hf, x0, opt);
      auto report = omega::preservation_report(trace, tol_energy, tol_form);
      if (!csv_path.empty()) {
        std::ofstream csv(csv_path);
        csv << "t";
        for (std::size_t i = 0; i < f.dim(); ++i) csv << ",x" << i;
        csv << "\n";
        for (std::size_t s = 0; s < trace.times.size(); ++s) {
          csv << trace.times[s];
          for (double c : trace.states[s]) csv << "," << c;
          csv << "\n";
        }
      }
      emit(Json{{"energy_drift", report.energy_drift},
                {"form_drift", report.form_drift},
                {"pass", report.pass}});
    }
  } catch (const omega::resource_error& e) {
    std::cerr << e.what() << "\n";
    return 4;
  } catch (const omega::error& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 3;
  }
  return 0;
}
