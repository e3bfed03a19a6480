#pragma once

#include <string>
#include <vector>

#include "ildtt/syntax.hpp"

namespace ildtt {

/// An intuitionistic parameter of a type family or constant.
struct Param {
  std::string name;
  TypePtr type;
};

struct TypeFamilyDecl {
  std::string name;
  std::vector<Param> params;
  SourceSpan span;
};

struct ConstDecl {
  std::string name;
  std::vector<Param> params;
  TypePtr type;
  SourceSpan span;
};

/// A finite pointed set written `pointed { a0*, a1, ... }`.
struct PointedLiteral {
  std::vector<std::string> labels;
  std::size_t base = 0;
};

/// One clause of a model binding. For unparameterised declarations the key
/// is empty. Type declarations carry `set`, constants carry `element`.
struct ModelEntry {
  std::vector<std::string> key;
  PointedLiteral set;
  std::string element;
};

struct ModelBinding {
  std::string name;
  bool is_type = false;
  std::vector<ModelEntry> entries;
  SourceSpan span;
};

struct Signature {
  std::vector<TypeFamilyDecl> types;
  std::vector<ConstDecl> consts;
  std::vector<ModelBinding> models;

  const TypeFamilyDecl* find_type(const std::string& name) const;
  const ConstDecl* find_const(const std::string& name) const;
  const ModelBinding* find_model(const std::string& name) const;
};

struct Definition {
  std::string name;
  TypePtr type;  // null when the definition is unannotated
  TermPtr term;
  SourceSpan span;
};

struct Module {
  std::string file;
  Signature sig;
  std::vector<Definition> defs;

  const Definition* find_def(const std::string& name) const;
};

}  // namespace ildtt
