#pragma once
// Knowledge graph over entities and relations extracted from text chunks,
// with provenance back to the chunks and cosine-searchable description
// embeddings for query-time seeding.

#include "adavrag/gateway.hpp"
#include "adavrag/prompts.hpp"
#include "adavrag/types.hpp"
#include "adavrag/vector_store.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace adavrag {

struct Entity {
    std::string entity_id;
    std::string entity_type;
    std::string name;
    std::string spatiotemporal;
    std::string description;
    std::set<std::string> source_chunk_ids;
};

struct Relation {
    std::string relation_id;
    std::string head_entity_id;
    std::string tail_entity_id;
    std::string kind; // spatio-temporal / causal / functional / other
    std::string description;
    std::set<std::string> source_chunk_ids;
};

struct Subgraph {
    std::set<std::string> entity_ids;
    std::set<std::string> relation_ids;
    std::set<std::string> source_chunk_ids;
};

class KnowledgeGraph {
public:
    KnowledgeGraph() = default;

    // Build-path insert: merges by (normalized name, entity type), unions
    // provenance, concatenates descriptions. Returns the entity id.
    std::string merge_entity(const std::string& entity_type, const std::string& name,
                             const std::string& spatiotemporal, const std::string& description,
                             const std::string& source_chunk_id);

    // Build-path insert keyed by endpoint names; unknown endpoints get stub
    // entities. Duplicate (head, tail, kind, description) rows union their
    // provenance instead of duplicating.
    std::string merge_relation(const std::string& head_name, const std::string& tail_name,
                               const std::string& kind, const std::string& description,
                               const std::string& source_chunk_id);

    // Load-path inserts, no merging.
    void insert_entity(Entity entity, EmbeddingVector description_embedding);
    void insert_relation(Relation relation, EmbeddingVector description_embedding);

    // Embeds every entity/relation description; call once after the merge
    // pass so concatenated descriptions embed whole.
    void embed_descriptions(ModelGateway& gateway);

    void freeze();
    bool frozen() const { return frozen_; }
    bool empty() const { return entities_.empty(); }

    const std::map<std::string, Entity>& entities() const { return entities_; }
    const std::map<std::string, Relation>& relations() const { return relations_; }
    const std::set<std::string>& adjacent_relations(const std::string& entity_id) const;
    std::optional<std::string> entity_id_by_name(const std::string& name) const;

    std::vector<SearchHit> top_entity_seeds(const EmbeddingVector& query, int n) const;
    std::vector<SearchHit> top_relation_seeds(const EmbeddingVector& query, int n) const;

    // Closed neighborhood: seeds (entity or relation ids) expanded by `hops`
    // relation traversals, then induced relations between included entities.
    Subgraph neighborhood(const std::set<std::string>& seeds, int hops) const;

    uint64_t search_count() const {
        return entity_vectors_.search_count() + relation_vectors_.search_count();
    }
    void reset_search_count() {
        entity_vectors_.reset_search_count();
        relation_vectors_.reset_search_count();
    }

    const VectorStore& entity_vectors() const { return entity_vectors_; }
    const VectorStore& relation_vectors() const { return relation_vectors_; }

    bool same_content(const KnowledgeGraph& other) const;

private:
    std::map<std::string, Entity> entities_;
    std::map<std::string, Relation> relations_;
    std::map<std::string, std::set<std::string>> adjacency_;
    std::map<std::pair<std::string, std::string>, std::string> entity_key_index_;
    std::map<std::string, std::string> name_index_; // normalized name -> first entity id
    VectorStore entity_vectors_;
    VectorStore relation_vectors_;
    int next_entity_ = 0;
    int next_relation_ = 0;
    bool frozen_ = false;

    void check_mutable() const;
};

struct GraphBuildReport {
    std::vector<std::string> skipped_chunk_ids; // extraction output stayed malformed
};

// Runs the extraction prompt over every chunk, parses the line-delimited
//   ENTITY<TAB>type<TAB>name<TAB>attr<TAB>desc
//   REL<TAB>head<TAB>tail<TAB>kind<TAB>desc
// records (one retry per chunk), merges, then embeds descriptions.
KnowledgeGraph build_graph(const std::vector<TextChunk>& chunks, ModelGateway& gateway,
                           const PromptTemplate& extract_template,
                           GraphBuildReport* report = nullptr);

Subgraph graph_neighborhood(const KnowledgeGraph& graph, const std::set<std::string>& seeds,
                            int hops);

} // namespace adavrag
