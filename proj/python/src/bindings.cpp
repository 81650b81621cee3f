/*
 * Copyright 2026 The fastgen Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Python bindings. Group elements, exponents and parameters cross the
// boundary as plain Python ints.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "fastgen/bench.hpp"
#include "fastgen/celebrity.hpp"
#include "fastgen/error.hpp"
#include "fastgen/files.hpp"
#include "fastgen/malicious.hpp"
#include "fastgen/oracle.hpp"
#include "fastgen/protocol.hpp"

namespace py = pybind11;

namespace pybind11::detail {

template <>
struct type_caster<fastgen::BigInt> {
  PYBIND11_TYPE_CASTER(fastgen::BigInt, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr())) return false;
    // "0x1f" or "-0x1f"; GMP's base 0 understands both.
    object text = reinterpret_steal<object>(PyNumber_ToBase(src.ptr(), 16));
    if (!text) {
      PyErr_Clear();
      return false;
    }
    return value.set_str(text.cast<std::string>(), 0) == 0;
  }

  static handle cast(const fastgen::BigInt& v, return_value_policy, handle) {
    return PyLong_FromString(v.get_str(16).c_str(), nullptr, 16);
  }
};

template <>
struct type_caster<fastgen::Element> {
  PYBIND11_TYPE_CASTER(fastgen::Element, const_name("int"));

  bool load(handle src, bool convert) {
    make_caster<fastgen::BigInt> inner;
    if (!inner.load(src, convert)) return false;
    value = fastgen::Element(cast_op<fastgen::BigInt&&>(std::move(inner)));
    return true;
  }

  static handle cast(const fastgen::Element& v, return_value_policy policy, handle parent) {
    return make_caster<fastgen::BigInt>::cast(v.value(), policy, parent);
  }
};

template <>
struct type_caster<fastgen::Exponent> {
  PYBIND11_TYPE_CASTER(fastgen::Exponent, const_name("int"));

  bool load(handle src, bool convert) {
    make_caster<fastgen::BigInt> inner;
    if (!inner.load(src, convert)) return false;
    value = fastgen::Exponent(cast_op<fastgen::BigInt&&>(std::move(inner)));
    return true;
  }

  static handle cast(const fastgen::Exponent& v, return_value_policy policy, handle parent) {
    return make_caster<fastgen::BigInt>::cast(v.value(), policy, parent);
  }
};

}  // namespace pybind11::detail

namespace fastgen {
namespace {

py::bytes to_bytes(std::span<const std::uint8_t> data) {
  return py::bytes(reinterpret_cast<const char*>(data.data()), data.size());
}

std::vector<std::uint8_t> from_bytes(const py::bytes& data) {
  const std::string s = data;
  return std::vector<std::uint8_t>(s.begin(), s.end());
}

py::object json_to_python(const nlohmann::json& doc) {
  return py::module_::import("json").attr("loads")(doc.dump());
}

py::dict agreement_dict(const Agreement& a) {
  py::dict out;
  out["msg_a"] = a.transcript.msg_a;
  out["msg_b"] = a.transcript.msg_b;
  out["secret_a"] = a.alice.secret;
  out["secret_b"] = a.bob.secret;
  out["shared"] = a.alice_shared;
  out["key_a"] = to_bytes(a.alice_key.bytes);
  out["key_b"] = to_bytes(a.bob_key.bytes);
  return out;
}

}  // namespace
}  // namespace fastgen

PYBIND11_MODULE(_core, m) {
  using namespace fastgen;
  m.doc() = "Diffie-Hellman fast-generator toolkit";

  // Carries the error category in .code, e.g. "not a subgroup member".
  static py::handle error_type = py::exception<Error>(m, "FastgenError", PyExc_ValueError).release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error_type)(e.what());
      exc.attr("code") = to_string(e.code());
      PyErr_SetObject(error_type.ptr(), exc.ptr());
    }
  });

  py::class_<GroupParams>(m, "GroupParams")
      .def(py::init(&make_params), py::arg("q"), py::arg("p"), py::arg("f"))
      .def_readonly("q", &GroupParams::q)
      .def_readonly("p", &GroupParams::p)
      .def_readonly("f", &GroupParams::f)
      .def_readonly("cofactor", &GroupParams::cofactor)
      .def("to_json", [](const GroupParams& g) { return params_to_json(g).dump(); })
      .def_static("from_json",
                  [](const std::string& s) { return params_from_json(nlohmann::json::parse(s)); })
      .def("id", &params_id)
      .def(py::self == py::self)
      .def("__repr__", [](const GroupParams& g) {
        return "GroupParams(q=0x" + to_hex(g.q) + ", p=0x" + to_hex(g.p) + ", f=" + to_hex(g.f) + ")";
      });

  py::class_<CostCounter>(m, "CostCounter")
      .def(py::init<>())
      .def_readonly("full_mults", &CostCounter::full_mults)
      .def_readonly("squarings", &CostCounter::squarings)
      .def_readonly("fast_steps", &CostCounter::fast_steps)
      .def("reset", &CostCounter::reset);

  // Group arithmetic.
  m.def("is_probable_prime", &is_probable_prime, py::arg("n"));
  m.def("generate_params", py::overload_cast<std::size_t, std::uint64_t>(&generate_params),
        py::arg("bits"), py::arg("seed"));
  m.def("find_fast_generator", &find_fast_generator, py::arg("q"), py::arg("p"));
  m.def("is_subgroup_member", &is_subgroup_member, py::arg("x"), py::arg("params"));
  m.def("mod_exp", &mod_exp, py::arg("base"), py::arg("e"), py::arg("params"),
        py::arg("counter") = nullptr);
  m.def("exp_fast_base", &exp_fast_base, py::arg("e"), py::arg("params"),
        py::arg("counter") = nullptr);
  m.def(
      "bench_exp",
      [](const GroupParams& params, std::uint64_t trials, std::uint64_t seed) {
        return json_to_python(bench_to_json(bench_exp(params, {trials, seed, false})));
      },
      py::arg("params"), py::arg("trials") = 1000, py::arg("seed") = 0);
  m.def(
      "bsgs_dlog",
      [](const Element& h, const Element& base, const GroupParams& params) {
        return bsgs_dlog(h, base, params);
      },
      py::arg("h"), py::arg("base"), py::arg("params"));

  // Oracle reductions, each against a perfect base-f oracle. Reductions
  // return (answer, oracle queries).
  m.def(
      "invert_exponent",
      [](const GroupParams& params, const Element& fr) {
        DhOracle oracle = make_perfect_dh_oracle(params, generator(params));
        const Element out = invert_exponent(oracle, fr, params);
        return py::make_tuple(out, oracle.query_count());
      },
      py::arg("params"), py::arg("fr"));
  m.def(
      "dh_any_base",
      [](const GroupParams& params, const Element& g, const Element& gx, const Element& gy) {
        DhOracle oracle = make_perfect_dh_oracle(params, generator(params));
        const Element out = dh_any_base(oracle, g, gx, gy, params);
        return py::make_tuple(out, oracle.query_count());
      },
      py::arg("params"), py::arg("g"), py::arg("gx"), py::arg("gy"));
  m.def(
      "dl_any_base",
      [](const GroupParams& params, const Element& g, const Element& gx) {
        DlOracle oracle = make_perfect_dl_oracle(params, generator(params));
        const Exponent out = dl_any_base(oracle, g, gx, params);
        return py::make_tuple(out, oracle.query_count());
      },
      py::arg("params"), py::arg("g"), py::arg("gx"));
  m.def("amplification_rounds", &amplification_rounds, py::arg("epsilon"),
        py::arg("target_error"));
  m.def(
      "amplified_dh",
      [](const GroupParams& params, const Element& fx, const Element& fy, double epsilon,
         double target_error, std::uint64_t seed) {
        DhOracle noisy = make_noisy_dh_oracle(make_perfect_dh_oracle(params, generator(params)),
                                              NoisySpec{epsilon, seed}, params);
        DhOracle amplified =
            amplify(std::move(noisy), epsilon, target_error, seed ^ 0x5bd1e995u, params);
        return amplified.answer(fx, fy);
      },
      py::arg("params"), py::arg("fx"), py::arg("fy"), py::arg("epsilon"),
      py::arg("target_error"), py::arg("seed"));

  // Key agreement.
  m.def("derive_key", [](const Element& s) { return to_bytes(derive_key(s).bytes); },
        py::arg("s"));
  m.def(
      "keygen",
      [](const GroupParams& params, const Element& g, std::uint64_t seed) {
        const KeyPair kp = keygen(params, g, seed);
        return py::make_tuple(kp.secret, kp.public_key);
      },
      py::arg("params"), py::arg("generator"), py::arg("seed"));
  m.def(
      "run_agreement",
      [](const GroupParams& params, const Element& g, std::uint64_t seed_a, std::uint64_t seed_b) {
        return agreement_dict(run_agreement(params, g, seed_a, seed_b));
      },
      py::arg("params"), py::arg("generator"), py::arg("seed_a"), py::arg("seed_b"));

  // Trapdoored standards.
  m.def(
      "forge_standard",
      [](const GroupParams& params, std::uint64_t seed) {
        const ForgedStandard forged = forge_standard(params, seed);
        return py::make_tuple(forged.standard.g, forged.trapdoor.t);
      },
      py::arg("params"), py::arg("seed"),
      "Returns (g, t) with g = f^t.");
  m.def(
      "authority_recover",
      [](const GroupParams& params, const BigInt& t, const Element& msg_a, const Element& msg_b) {
        const ForgedStandard forged = forge_standard_with(params, t);
        MdhOracle oracle =
            make_simulated_mdh_oracle(trapdoor_params(forged.standard, forged.trapdoor));
        const Transcript transcript{params_id(forged.standard.params), forged.standard.g, msg_a,
                                    msg_b};
        return to_bytes(authority_recover(forged.trapdoor, forged.standard, transcript, oracle).bytes);
      },
      py::arg("params"), py::arg("t"), py::arg("msg_a"), py::arg("msg_b"),
      "Recovers the derived key of a transcript under the standard g = f^t.");

  // Celebrity public-key scheme.
  m.def(
      "celebrity_keygen",
      [](const GroupParams& params, std::uint64_t seed) {
        const CelebrityKey ck = celebrity_keygen(params, seed);
        return py::make_tuple(ck.r, ck.g);
      },
      py::arg("params"), py::arg("seed"), "Returns (r, g) with g = f^r.");
  m.def(
      "subscriber_keygen",
      [](const GroupParams& params, const Element& g, std::uint64_t seed) {
        const SubscriberKey sk = subscriber_keygen(g, params, seed);
        return py::make_tuple(sk.a, sk.public_key);
      },
      py::arg("params"), py::arg("g"), py::arg("seed"), "Returns (a, g^a).");
  m.def(
      "celebrity_encrypt",
      [](const GroupParams& params, const BigInt& r, const Element& subscriber_public,
         const py::bytes& msg) {
        const CelebrityKey ck = celebrity_keygen_from(params, r);
        MdhOracle oracle = make_simulated_mdh_oracle(params);
        const auto plain = from_bytes(msg);
        return to_bytes(encode_ciphertext(celebrity_encrypt(ck, subscriber_public, plain, oracle, params)));
      },
      py::arg("params"), py::arg("r"), py::arg("subscriber_public"), py::arg("msg"));
  m.def(
      "subscriber_decrypt",
      [](const GroupParams& params, const BigInt& a, const Element& g, const py::bytes& ct) {
        const SubscriberKey sk = subscriber_keygen_from(g, params, a);
        return to_bytes(subscriber_decrypt(sk, g, decode_ciphertext(from_bytes(ct)), params));
      },
      py::arg("params"), py::arg("a"), py::arg("g"), py::arg("ciphertext"));
  m.def(
      "square_to_dh",
      [](const GroupParams& params, const Element& g, const Element& gx, const Element& gy) {
        SquaringOracle sq = make_perfect_squaring_oracle(params, g);
        const Element out = square_to_dh(sq, g, gx, gy, params);
        return py::make_tuple(out, sq.query_count());
      },
      py::arg("params"), py::arg("g"), py::arg("gx"), py::arg("gy"));
}
