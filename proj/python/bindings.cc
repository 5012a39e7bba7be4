// Copyright 2026 The dpvo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Python bindings. Images cross the boundary as 2-D uint8 numpy arrays and
// bit strings as 1-D uint8 arrays of 0/1.

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstring>
#include <string>

#include "dpvo/arith_coder.h"
#include "dpvo/error.h"
#include "dpvo/image.h"
#include "dpvo/metrics.h"
#include "dpvo/pipeline.h"
#include "dpvo/prng.h"

namespace py = pybind11;

namespace {

using U8Array = py::array_t<uint8_t, py::array::c_style | py::array::forcecast>;

dpvo::GrayImage ToImage(const U8Array& a) {
  if (a.ndim() != 2) throw std::invalid_argument("image must be 2-D");
  dpvo::GrayImage img(static_cast<int>(a.shape(1)), static_cast<int>(a.shape(0)));
  std::memcpy(img.pixels.data(), a.data(), img.pixels.size());
  return img;
}

U8Array FromImage(const dpvo::GrayImage& img) {
  U8Array a({img.height, img.width});
  std::memcpy(a.mutable_data(), img.pixels.data(), img.pixels.size());
  return a;
}

dpvo::BitString ToBits(const U8Array& a) {
  dpvo::BitString bits(a.data(), a.data() + a.size());
  for (uint8_t b : bits) {
    if (b > 1) throw std::invalid_argument("bits must be 0 or 1");
  }
  return bits;
}

U8Array FromBits(const dpvo::BitString& bits) {
  U8Array a(static_cast<py::ssize_t>(bits.size()));
  if (!bits.empty()) std::memcpy(a.mutable_data(), bits.data(), bits.size());
  return a;
}

dpvo::Scheme ParseScheme(const std::string& s) {
  if (s == "dpvo") return dpvo::Scheme::kTwoPhase;
  if (s == "forward-only") return dpvo::Scheme::kForwardOnly;
  throw std::invalid_argument("scheme must be 'dpvo' or 'forward-only'");
}

py::dict ReportDict(const dpvo::EmbedReport& r) {
  py::dict d;
  d["gross_bits"] = r.gross_bits;
  d["net_bits"] = r.net_bits;
  d["aux_bits"] = r.aux_bits;
  d["fwd_bits"] = r.fwd_bits;
  d["bwd_bits"] = r.bwd_bits;
  d["padding"] = r.padding;
  d["lm_clen"] = r.lm_clen;
  d["mou_clen"] = r.mou_clen;
  d["reserved_rows"] = r.reserved_rows;
  d["lsb_carry"] = r.lsb_carry == dpvo::LsbCarry::kInRegion ? "region" : "payload";
  d["psnr_db"] = r.psnr_db;
  return d;
}

}  // namespace

PYBIND11_MODULE(_dpvo, m) {
  m.doc() = "Two-phase dual pixel-value-ordering reversible data hiding";

  static py::exception<dpvo::Error> error(m, "DpvoError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const dpvo::Error& e) {
      static const char* kNames[] = {"format", "invalid_argument",
                                     "capacity_exceeded", "aux_overflow",
                                     "container_invalid", "codec_desync"};
      py::object exc = error;
      PyErr_SetObject(exc.ptr(),
                      py::make_tuple(e.what(), kNames[static_cast<int>(e.code())])
                          .ptr());
    }
  });

  m.def("read_pgm", [](const std::string& path) {
    return FromImage(dpvo::ReadPgmFile(path));
  }, py::arg("path"));
  m.def("write_pgm", [](const U8Array& img, const std::string& path) {
    dpvo::WritePgmFile(ToImage(img), path);
  }, py::arg("image"), py::arg("path"));

  m.def("prng_payload", [](uint64_t seed, size_t n) {
    return FromBits(dpvo::PrngPayload(seed, n));
  }, py::arg("seed"), py::arg("n"));

  m.def("encode",
        [](const U8Array& cover, const U8Array& bits, const std::string& scheme,
           int reserved_rows) {
          const dpvo::EncodeResult r = dpvo::Encode(
              ToImage(cover), ToBits(bits), {ParseScheme(scheme), reserved_rows});
          return py::make_tuple(FromImage(r.stego), ReportDict(r.report));
        },
        py::arg("cover"), py::arg("bits"), py::arg("scheme") = "dpvo",
        py::arg("reserved_rows") = 0);

  m.def("decode",
        [](const U8Array& stego, const std::string& scheme) {
          const dpvo::DecodeResult r = dpvo::Decode(ToImage(stego), ParseScheme(scheme));
          return py::make_tuple(FromImage(r.cover), FromBits(r.data));
        },
        py::arg("stego"), py::arg("scheme") = "dpvo");

  m.def("max_payload",
        [](const U8Array& cover, const std::string& scheme, uint64_t seed) {
          return dpvo::MaxPayload(ToImage(cover), {ParseScheme(scheme), 0}, seed);
        },
        py::arg("cover"), py::arg("scheme") = "dpvo", py::arg("seed") = 1);

  m.def("capacity",
        [](const U8Array& cover, uint64_t seed) {
          const dpvo::CapacityReport c = dpvo::AnalyzeCapacity(ToImage(cover), seed);
          py::dict d;
          d["reserved_rows"] = c.reserved_rows;
          d["forward_bits"] = c.fwd_bits;
          d["backward_min_bits"] = c.bwd_min_bits;
          d["backward_max_bits"] = c.bwd_max_bits;
          d["backward_bits"] = c.bwd_bits;
          d["overall_bits"] = c.gross_bits;
          d["psnr_forward_db"] = c.psnr_fwd;
          d["psnr_two_phase_db"] = c.psnr_two_phase;
          return d;
        },
        py::arg("cover"), py::arg("seed") = 1);

  m.def("psnr", [](const U8Array& a, const U8Array& b) {
    return dpvo::Psnr(ToImage(a), ToImage(b));
  }, py::arg("a"), py::arg("b"));

  m.def("arith_encode", [](const U8Array& bits) {
    return FromBits(dpvo::ArithEncode(ToBits(bits)));
  }, py::arg("bits"));
  m.def("arith_decode", [](const U8Array& code, size_t n) {
    return FromBits(dpvo::ArithDecode(ToBits(code), n));
  }, py::arg("code"), py::arg("n"));
}
