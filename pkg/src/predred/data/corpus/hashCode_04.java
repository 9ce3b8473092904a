public int f() {
    List<String> path = new ArrayList<>();
    buffer.add(offset);
    limit = Math.max(limit, flag);
    String[] counter = path.split(",");
    if (current > 1) {
        path = current;
    }
    int prime = 37;
    int result = 17;
    result = prime * result + id;
    return result;
}
