// SPDX-License-Identifier: Apache-2.0
#include "graphbench/prompts.hpp"

#include "graphbench/graph.hpp"
#include "graphbench/templates.hpp"

namespace graphbench {

namespace {

constexpr const char* kWithToolsTemplate =
    R"PROMPT(You are a helpful assistant helping with Neo4j graph database in a controlled environment.
At your disposal, you have a variety of tools, each specialized in performing a distinct
type of task. For successful task completion, based on the schema representation of the
database, consider the task at hand and determine which tool or set of tools is best
suited based on its capabilities and the nature of the query. Each one of the tools is
equivalent to a cypher query. You can call the tools to query the graph database and
extract the necessary information, but you cannot write a query yourself. Please note
that in order to get the right answer, you might need to traverse the entire
graph database.

This is the graph schema representation
of the database:
<graph_schema>
{graph_schema}
</graph_schema>

System time:
<system_time>
{system_time}
</system_time>

<guidelines>
- Think step by step.
- If property values in the graph schema end with '...', it means the list is not
    exhaustive and you should obtain the full list from the graph database if needed.
- Use the tools to query the graph database and extract the necessary information.
- Remember that unless otherwise specified the tools are DETERMINISTIC, which means
calling them with the same arguments again will return the same result
and should be avoided.
- Provide the answer in the correct format that is requested in the question.
- If the user query is not answered by the tools, ask for additional information.
- Continue calling tools until you have all the necessary information needed to answer
the user query. When you have the final answer, STOP CALLING ANY TOOLS.
</guidelines>)PROMPT";

constexpr const char* kNoToolsTemplate =
    R"PROMPT(You are a helpful assistant that answers questions about a graph database.
You are given the entire graph structure and its values in the format below.
Use this information to answer the user's question.

The graph is represented below:
<graph_data>

{graph_data}

</graph_data>

System time:
<system_time>

{system_time}

</system_time>

Based on the graph data provided, please answer the following question.)PROMPT";

constexpr const char* kMazeNoToolsTemplate =
    R"PROMPT(You are an AI agent solving a maze navigation problem. Your goal is to find
the shortest path from the Start cell (S, key: {start_node_key}) to the Goal
cell (G, key: {end_node_key}) in a grid-based maze.


The maze is represented as a visual grid where each character/number
represents a cell:

{wall_legend_line}

- Numbers (0, 1, 2, ...) represent open path cells, with each number being
the cell's unique key

- 'S' represents the Start cell

- 'G' represents the Goal cell


The maze is displayed with borders to clearly show cell boundaries:

- '|' represents vertical borders between cells

- '+' and '-' represent horizontal borders between rows

- These border characters are for display only and are NOT part of the maze itself


Each traversable cell displays its unique key (0-indexed position). Cell keys
increase left-to-right, top-to-bottom. For example, in a 10x10 maze, the top-left
cell is 0, the cell to its right is 1, and so on. The first cell of the second row
is 10.


The maze is a {maze_size} grid.

<maze_data>

{maze_data}

</maze_data>


<guidelines>

- Analyze the maze representation provided above.

- Find the shortest path from the Start cell (S) to the Goal cell (G).

- {wall_guideline}

- Each traversable cell displays its unique key (the number shown inside the cell).
Use these keys to specify your path. Ignore border characters ('|', '+', '-') as
they are for display only.

- Note: The Start cell (S) has key {start_node_key} and the Goal cell (G) has key
{end_node_key}. They display 'S' and 'G' instead of their numeric keys in the maze
for clarity.

- When you have found the complete path, return your answer as a JSON object with
the complete sequence of cell keys that form the shortest path from Start to Goal.

- Return ONLY the JSON output in the format: {output_schema}

</guidelines>)PROMPT";

constexpr const char* kMazeWithToolsTemplate =
    R"PROMPT(You are an AI agent solving a maze navigation problem. Your goal is to
find the shortest path from the Start cell (key: {start_node_key}) to
the End cell (key: {end_node_key}) in a grid-based maze.


The maze is represented as a graph database where cells are nodes connected
by ADJACENT relationships. At your disposal, you have a variety of tools,
each specialized in performing a distinct type of task.
Each tool is equivalent to a cypher query on the graph database.


The maze is a {maze_size} grid.

<graph_schema>

{graph_schema}

</graph_schema>

<guidelines>

- Think step by step.

- Use the tools to query the graph database and find the path from
start to end.

- Remember that tools are DETERMINISTIC - calling them with the same
arguments will return the same result.

{tool_history_note}

- The euclidian-distance property of each cell is the Euclidean
distance from the End cell. The closer the cell is to the end node,
the smaller the euclidian-distance.

- Cells that have not been marked yet have a mark_order value of -1.

- Continue using tools until you have found the complete path. When
you have the final answer, STOP CALLING TOOLS and return the complete
sequence of cell keys that form the shortest path from start to end
in a list. Remove redundant cells which belong to unnecessary
traversal. A hint to identify redundant cells is that when you sort
by marked order, you see a large different in cell keys between
consecutive cells. Construct shortest path by removing redundant
cells, starting from the source node.

- Return ONLY the JSON output in the format: {output_schema}

</guidelines>)PROMPT";

constexpr const char* kWallLegendLine =
    "- '#' represents walls (impassable cells)";

constexpr const char* kWallGuideline =
    "You may only move between horizontally or vertically adjacent open cells; "
    "never step on a '#' wall cell.";

constexpr const char* kToolHistoryNote =
    "- Your previous tool calls and their results stay visible in the "
    "conversation; consult that history instead of repeating a call.";

std::string maze_size_text(const MazeState& maze) {
    return std::to_string(maze.width()) + "x" + std::to_string(maze.height());
}

}  // namespace

std::string build_prompt_with_tools(const std::string& schema_text,
                                    const std::string& system_time) {
    return fill_placeholders(kWithToolsTemplate, {{"graph_schema", schema_text},
                                                  {"system_time", system_time}});
}

std::string build_prompt_no_tools(const std::string& graph_text,
                                  const std::string& system_time) {
    return fill_placeholders(kNoToolsTemplate, {{"graph_data", graph_text},
                                                {"system_time", system_time}});
}

std::string maze_output_schema() { return R"({"path": ["key1", "key2", ...]})"; }

std::string build_maze_prompt_no_tools(const MazeState& maze) {
    return fill_placeholders(
        kMazeNoToolsTemplate,
        {{"start_node_key", maze.start_key()},
         {"end_node_key", maze.goal_key()},
         {"wall_legend_line", kWallLegendLine},
         {"wall_guideline", kWallGuideline},
         {"maze_size", maze_size_text(maze)},
         {"maze_data", maze.render_ascii(MazeOverlay::plain)},
         {"output_schema", maze_output_schema()}});
}

std::string build_maze_prompt_with_tools(const MazeState& maze) {
    return fill_placeholders(
        kMazeWithToolsTemplate,
        {{"start_node_key", maze.start_key()},
         {"end_node_key", maze.goal_key()},
         {"maze_size", maze_size_text(maze)},
         {"graph_schema", render_schema(maze_schema_description()).to_text()},
         {"tool_history_note", kToolHistoryNote},
         {"output_schema", maze_output_schema()}});
}

}  // namespace graphbench
