/* io: inputs=6 outputs=6 */
#include <stdio.h>
int fibonacci(int n)
{
    if (n < 2)
        return n;
    return fibonacci(n - 1) + fibonacci(n - 2);
}
int queue_cost(int depth, int width)
{
    int cost, level;
    cost = 0;
    for (level = 0; level < depth; level = level + 1)
    {
        cost = cost + level * width;
        if (cost > 100000)
            return cost;
    }
    return cost;
}
int priority(int urgency, int size)
{
    int score;
    score = urgency * 10;
    if (size > 50)
        score = score - 5;
    if (score < 0)
        score = 0;
    return score;
}
void banner(int jobs)
{
    if (jobs == 0)
        printf("no jobs\n");
    if (jobs > 99)
        printf("heavy load\n");
    printf("scheduling %d jobs\n", jobs);
}
int main()
{
    int jobs, i, urgency, size, score, total, deep, burst;
    scanf("%d", &jobs);
    if (jobs < 0)
        jobs = 0;
    banner(jobs);
    total = 0;
    for (i = 0; i < jobs; i = i + 1)
    {
        scanf("%d %d", &urgency, &size);
        score = priority(urgency, size);
        if (score > 80)
        {
            burst = fibonacci(score % 10);
            total = total + burst;
            if (burst > 20)
                printf("burst spike %d\n", burst);
        }
        total = total + score;
        while (total > 1000)
        {
            total = total - 1000;
            printf("rollover\n");
        }
    }
    deep = queue_cost(jobs, 4);
    printf("total %d\n", total);
    printf("queue cost %d\n", deep);
    printf("jobs %d\n", jobs);
    return 0;
}
