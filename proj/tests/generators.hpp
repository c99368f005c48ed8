#pragma once

// Hand-rolled generators for the property tests.  Every generator takes the
// engine by reference so a failing case can be replayed from its seed.

#include <random>
#include <vector>

#include "uncomp/error.hpp"
#include "uncomp/machine.hpp"

namespace gen {

using Rng = std::mt19937_64;

inline uncomp::BitString bits(Rng& rng, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::bernoulli_distribution bit(0.5);
  uncomp::BitString s;
  for (std::size_t n = len(rng); n > 0; --n) s.push_back(bit(rng));
  return s;
}

// A valid deterministic machine over registers r0..r2, 1..max_size
// instructions, ending in HALT or JMP.
inline uncomp::MachineDescription machine(Rng& rng, std::size_t max_size = 8, bool coin = false) {
  using uncomp::Instruction;
  using uncomp::Opcode;
  std::uniform_int_distribution<std::size_t> size(1, max_size);
  std::uniform_int_distribution<int> reg(0, 2);
  std::uniform_int_distribution<int> op(0, coin ? 8 : 7);
  for (;;) {
    const std::size_t n = size(rng);
    std::uniform_int_distribution<std::uint32_t> target(0, static_cast<std::uint32_t>(n - 1));
    std::vector<Instruction> prog;
    for (std::size_t i = 0; i < n; ++i) {
      Instruction ins;
      ins.op = static_cast<Opcode>(op(rng));
      ins.reg = static_cast<std::uint8_t>(reg(rng));
      if (ins.op == Opcode::Jz || ins.op == Opcode::Jmp) {
        ins.target = target(rng);
      } else {
        ins.target = 0;
      }
      if (ins.op == Opcode::Jmp || ins.op == Opcode::Halt) ins.reg = 0;
      prog.push_back(ins);
    }
    prog.back() = Instruction{Opcode::Halt, 0, 0};
    try {
      return uncomp::MachineDescription(std::move(prog));
    } catch (const uncomp::DomainError&) {
    }
  }
}

}  // namespace gen
